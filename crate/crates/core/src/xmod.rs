//! Crossed modules `∂: S → R` with an action of `R` on `S`.

use std::sync::Arc;

use crate::action::{conjugation_action, GroupAction};
use crate::error::{Error, Result};
use crate::group::{center_subgroup, direct_product, Elem, GroupTable, Subgroup};
use crate::hom::{automorphism_group, Homomorphism};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct CrossedModule {
    boundary: Homomorphism,
    action: GroupAction,
}

impl CrossedModule {
    /// Validated crossed module; fails with the full report otherwise.
    pub fn new(boundary: Homomorphism, action: GroupAction) -> Result<Self> {
        let x = Self::candidate(boundary, action)?;
        let report = is_crossed_module(&x);
        if report.is_valid() {
            Ok(x)
        } else {
            Err(Error::Axioms(report))
        }
    }

    /// Pairs a boundary with an action without checking the axioms; the
    /// groups must match.
    pub fn candidate(boundary: Homomorphism, action: GroupAction) -> Result<Self> {
        if boundary.source().order() != action.space().order() || boundary.target().order() != action.actor().order() {
            return Err(Error::GroupMismatch);
        }
        Ok(CrossedModule { boundary, action })
    }

    pub fn source(&self) -> &Arc<GroupTable> {
        self.boundary.source()
    }

    pub fn range(&self) -> &Arc<GroupTable> {
        self.boundary.target()
    }

    pub fn boundary(&self) -> &Homomorphism {
        &self.boundary
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// `r ▷ s`
    #[inline]
    pub fn act(&self, r: Elem, s: Elem) -> Elem {
        self.action.apply(r, s)
    }

    pub fn size(&self) -> [usize; 2] {
        [self.source().order(), self.range().order()]
    }
}

/// Checks equivariance `∂(r▷s) = r·∂(s)·r⁻¹` and the Peiffer identity
/// `∂(s₂)▷s₁ = s₂·s₁·s₂⁻¹` over all pairs.
pub fn is_crossed_module(x: &CrossedModule) -> Report {
    let (s, r) = (x.source(), x.range());
    let d = &x.boundary;
    let mut report = Report::new();
    let equivariance = r
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .find(|&(a, b)| d.apply(x.act(a, b)) != r.conj(a, d.apply(b)))
        .map(|(a, b)| vec![a, b]);
    report.record("equivariance", equivariance);
    let peiffer = s
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .find(|&(s1, s2)| x.act(d.apply(s2), s1) != s.conj(s2, s1))
        .map(|(s1, s2)| vec![s1, s2]);
    report.record("peiffer", peiffer);
    report
}

/// `(σ, ρ)` with `∂₂∘σ = ρ∘∂₁` and `σ(r▷s) = ρ(r)▷σ(s)`.
#[derive(Clone, Debug)]
pub struct XModMorphism {
    pub source: CrossedModule,
    pub target: CrossedModule,
    pub sigma: Homomorphism,
    pub rho: Homomorphism,
}

impl XModMorphism {
    pub fn new(source: &CrossedModule, target: &CrossedModule, sigma: Homomorphism, rho: Homomorphism) -> Result<Self> {
        let shapes_match = sigma.source().order() == source.source().order()
            && sigma.target().order() == target.source().order()
            && rho.source().order() == source.range().order()
            && rho.target().order() == target.range().order();
        if !shapes_match {
            return Err(Error::GroupMismatch);
        }
        if let Some(s) = source
            .source()
            .elements()
            .find(|&s| target.boundary.apply(sigma.apply(s)) != rho.apply(source.boundary.apply(s)))
        {
            return Err(Error::Identity { identity: "∂₂∘σ = ρ∘∂₁", witness: s });
        }
        for r in source.range().elements() {
            if let Some(s) = source
                .source()
                .elements()
                .find(|&s| sigma.apply(source.act(r, s)) != target.act(rho.apply(r), sigma.apply(s)))
            {
                return Err(Error::Identity { identity: "σ(r▷s) = ρ(r)▷σ(s)", witness: s });
            }
        }
        Ok(XModMorphism { source: source.clone(), target: target.clone(), sigma, rho })
    }
}

/// Inclusion of a normal subgroup, acted on by conjugation.
pub fn conjugation_xmod(n: &Subgroup) -> Result<CrossedModule> {
    let action = conjugation_action(n.parent(), n)?;
    CrossedModule::new(n.embedded().inclusion.clone(), action)
}

/// `S → Aut(S)`, `s ↦ (x ↦ s·x·s⁻¹)`, with `Aut(S)` acting naturally.
pub fn automorphism_xmod(s: &Arc<GroupTable>) -> Result<CrossedModule> {
    let auts = automorphism_group(s);
    let (aut, action) = auts.as_group()?;
    let map = s
        .elements()
        .map(|x| {
            let conj: Vec<Elem> = s.elements().map(|y| s.conj(x, y)).collect();
            auts.position(&conj).map(|p| p as Elem).ok_or_else(|| Error::NotAGroup("Inn(S) ⊄ Aut(S)".into()))
        })
        .collect::<Result<Vec<Elem>>>()?;
    CrossedModule::new(Homomorphism::new(s, &aut, map)?, action)
}

/// Abelian `M` with an action of `P` and the zero boundary.
pub fn zero_boundary_xmod(m: &Arc<GroupTable>, p: &Arc<GroupTable>, action: GroupAction) -> Result<CrossedModule> {
    require_abelian(m)?;
    if action.actor().order() != p.order() {
        return Err(Error::GroupMismatch);
    }
    CrossedModule::new(Homomorphism::zero(m, p), action)
}

pub(crate) fn require_abelian(g: &GroupTable) -> Result<()> {
    for &a in g.generators() {
        for &b in g.generators() {
            if g.mul(a, b) != g.mul(b, a) {
                return Err(Error::NotAbelian(a, b));
            }
        }
    }
    Ok(())
}

/// Surjection with central kernel; `r ▷ s = x·s·x⁻¹` for the least
/// preimage `x` of `r`.
pub fn central_extension_xmod(f: &Homomorphism) -> Result<CrossedModule> {
    central_extension_with(f, |preimages| preimages[0])
}

fn central_extension_with(f: &Homomorphism, choose: impl Fn(&[Elem]) -> Elem) -> Result<CrossedModule> {
    let (s, r) = (f.source(), f.target());
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let center = center_subgroup(s);
    if let Some(&k) = f.kernel().members().iter().find(|&&k| !center.contains(k)) {
        let other = s.generators().iter().copied().find(|&g| s.mul(g, k) != s.mul(k, g)).unwrap_or(0);
        return Err(Error::KernelNotCentral(k, other));
    }
    let mut preimages: Vec<Vec<Elem>> = vec![Vec::new(); r.order()];
    for x in s.elements() {
        preimages[f.apply(x) as usize].push(x);
    }
    let mut table = Vec::with_capacity(r.order() * s.order());
    for pre in &preimages {
        let x = choose(pre);
        table.extend(s.elements().map(|y| s.conj(x, y)));
    }
    CrossedModule::new(f.clone(), GroupAction::new(r, s, table)?)
}

/// Componentwise product; `(s₁, s₂)` has index `s₁ + |S₁|·s₂`, likewise
/// for the ranges.
pub fn direct_product_xmod(x1: &CrossedModule, x2: &CrossedModule) -> Result<CrossedModule> {
    let s = direct_product(x1.source(), x2.source())?;
    let r = direct_product(x1.range(), x2.range())?;
    let (ns1, nr1) = (x1.source().order() as Elem, x1.range().order() as Elem);
    let boundary = s.elements().map(|x| x1.boundary.apply(x % ns1) + nr1 * x2.boundary.apply(x / ns1)).collect();
    let mut table = Vec::with_capacity(r.order() * s.order());
    for a in r.elements() {
        let (a1, a2) = (a % nr1, a / nr1);
        table.extend(s.elements().map(|b| x1.act(a1, b % ns1) + ns1 * x2.act(a2, b / ns1)));
    }
    let boundary = Homomorphism::new(&s, &r, boundary)?;
    CrossedModule::new(boundary, GroupAction::new(&r, &s, table)?)
}
