//! Cat²-groups: two commuting cat¹ structures on one group. Also cat^n
//! construction, enumeration, classification up to isomorphism, morphisms
//! and the diagonal probe.

use std::sync::Arc;

use rayon::prelude::*;

use crate::cat1::{
    disagreement, enumerate_cat1, pre_cat1_by_endomorphisms, Cat1Conjugator, Cat1Enumeration, Cat1Group, Families,
    PreCat1Group,
};
use crate::error::{Error, Result};
use crate::group::{noncommuting_pair, Elem, GroupTable, Subgroup};
use crate::hom::{all_homomorphisms, automorphism_group, isomorphism_between, Automorphisms, Homomorphism};
use crate::report::Report;

const IDENTITIES: [&str; 4] = ["t₁∘t₂ = t₂∘t₁", "h₁∘h₂ = h₂∘h₁", "t₁∘h₂ = h₂∘t₁", "t₂∘h₁ = h₁∘t₂"];

/// First failing commutation identity between `(t₁, h₁)` and `(t₂, h₂)`,
/// with a generator witness.
fn commutation_failure(
    g: &GroupTable,
    (t1, h1): (&Homomorphism, &Homomorphism),
    (t2, h2): (&Homomorphism, &Homomorphism),
) -> Option<(&'static str, Elem)> {
    let pairs = [(t1, t2), (h1, h2), (t1, h2), (t2, h1)];
    pairs.iter().zip(IDENTITIES).find_map(|(&(f, k), name)| {
        disagreement(g, |x| f.apply(k.apply(x)), |x| k.apply(f.apply(x))).map(|w| (name, w))
    })
}

/// The four commutation identities between `(t₁, h₁)` and `(t₂, h₂)`.
pub fn commutation_report(
    (t1, h1): (&Homomorphism, &Homomorphism),
    (t2, h2): (&Homomorphism, &Homomorphism),
) -> Report {
    let g = t1.source();
    let mut report = Report::new();
    for (&(f, k), name) in [(t1, t2), (h1, h2), (t1, h2), (t2, h1)].iter().zip(IDENTITIES) {
        report.record(name, disagreement(g, |x| f.apply(k.apply(x)), |x| k.apply(f.apply(x))).map(|w| vec![w]));
    }
    report
}

#[inline]
fn commutes(gens: &[Elem], f: &[Elem], k: &[Elem]) -> bool {
    gens.iter().all(|&x| f[k[x as usize] as usize] == k[f[x as usize] as usize])
}

/// Two pre-cat¹ structures satisfying the four commutation identities.
#[derive(Clone, Debug)]
pub struct PreCat2Group {
    first: PreCat1Group,
    second: PreCat1Group,
}

impl PreCat2Group {
    pub fn new(first: &PreCat1Group, second: &PreCat1Group) -> Result<Self> {
        let g = first.group();
        if g.order() != second.group().order() {
            return Err(Error::GroupMismatch);
        }
        if let Some((identity, witness)) =
            commutation_failure(g, (first.tail(), first.head()), (second.tail(), second.head()))
        {
            return Err(Error::Identity { identity, witness });
        }
        Ok(PreCat2Group { first: first.clone(), second: second.clone() })
    }

    pub fn first(&self) -> &PreCat1Group {
        &self.first
    }

    pub fn second(&self) -> &PreCat1Group {
        &self.second
    }

    /// Upgrades to a cat²-group when both structures are cat¹.
    pub fn to_cat2(&self) -> Result<Cat2Group> {
        let c1 = Cat1Group::from_pre(self.first.clone())?;
        let c2 = Cat1Group::from_pre(self.second.clone())?;
        cat2_group(&c1, &c2)
    }

    pub fn is_cat2(&self) -> bool {
        self.first.is_cat1() && self.second.is_cat1()
    }
}

/// A cat²-group `(G; t₁, h₁; t₂, h₂)`, kept in the orientation it was
/// built with.
#[derive(Clone, Debug)]
pub struct Cat2Group {
    first: Cat1Group,
    second: Cat1Group,
    r12: Subgroup,
}

/// Checks the commutation identities and records `R₁₂ = im(t₁∘t₂)`.
pub fn cat2_group(first: &Cat1Group, second: &Cat1Group) -> Result<Cat2Group> {
    PreCat2Group::new(first.as_pre(), second.as_pre())?;
    Ok(Cat2Group::new_unchecked(first.clone(), second.clone()))
}

impl Cat2Group {
    pub(crate) fn new_unchecked(first: Cat1Group, second: Cat1Group) -> Self {
        let r12 = first.tail().compose(second.tail()).expect("same group").image();
        Cat2Group { first, second, r12 }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.first.group()
    }

    pub fn first(&self) -> &Cat1Group {
        &self.first
    }

    pub fn second(&self) -> &Cat1Group {
        &self.second
    }

    pub fn r1(&self) -> &Subgroup {
        self.first.range()
    }

    pub fn r2(&self) -> &Subgroup {
        self.second.range()
    }

    pub fn r12(&self) -> &Subgroup {
        &self.r12
    }

    /// `[|G|, |R₁|, |R₂|, |R₁₂|]`
    pub fn size(&self) -> [usize; 4] {
        [self.group().order(), self.r1().order(), self.r2().order(), self.r12.order()]
    }

    /// The same pair in the opposite orientation.
    pub fn transpose(&self) -> Cat2Group {
        Cat2Group { first: self.second.clone(), second: self.first.clone(), r12: self.r12.clone() }
    }
}

/// The diagonal `(G; t₁∘t₂, h₁∘h₂)` and, when it is not a cat¹-group, a
/// noncommuting pair from its kernels.
pub fn diagonal_pre_cat1(c: &Cat2Group) -> (PreCat1Group, Option<(Elem, Elem)>) {
    let t = c.first.tail().compose(c.second.tail()).expect("same group");
    let h = c.first.head().compose(c.second.head()).expect("same group");
    let pre = pre_cat1_by_endomorphisms(&t, &h).expect("the diagonal of a cat²-group is pre-cat¹");
    let witness = pre.kernel_commutator_witness();
    (pre, witness)
}

/// All cat² structures on one group as unordered pairs `i ≤ j` of
/// positions in the cat¹ enumeration, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Cat2Enumeration {
    cat1: Cat1Enumeration,
    pairs: Vec<(u32, u32)>,
}

impl Cat2Enumeration {
    pub fn cat1(&self) -> &Cat1Enumeration {
        &self.cat1
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.cat1.group()
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn position(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j) as u32, i.max(j) as u32);
        self.pairs.binary_search(&key).ok()
    }

    pub fn structure(&self, k: usize) -> Cat2Group {
        let (i, j) = self.pairs[k];
        Cat2Group::new_unchecked(self.cat1.structure(i as usize), self.cat1.structure(j as usize))
    }

    /// Whether the diagonal of structure `k` is a cat¹-group.
    pub fn diagonal_is_cat1(&self, k: usize) -> bool {
        let (i, j) = self.pairs[k];
        let g = self.group();
        let t = self.cat1.tail(i as usize).compose(self.cat1.tail(j as usize)).expect("same group");
        let h = self.cat1.head(i as usize).compose(self.cat1.head(j as usize)).expect("same group");
        noncommuting_pair(g, &t.kernel().generators(), &h.kernel().generators()).is_none()
    }
}

pub fn enumerate_cat2(g: &Arc<GroupTable>) -> Cat2Enumeration {
    cat2_from_cat1(enumerate_cat1(g))
}

pub fn cat2_from_cat1(cat1: Cat1Enumeration) -> Cat2Enumeration {
    let gens = cat1.group().generators();
    let n = cat1.len();
    let maps: Vec<(&[Elem], &[Elem])> = (0..n).map(|i| (cat1.tail(i).map(), cat1.head(i).map())).collect();
    let pairs = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let (t1, h1) = maps[i];
            let maps = &maps;
            (i..n).filter_map(move |j| {
                let (t2, h2) = maps[j];
                (commutes(gens, t1, t2) && commutes(gens, h1, h2) && commutes(gens, t1, h2) && commutes(gens, t2, h1))
                    .then_some((i as u32, j as u32))
            })
        })
        .collect();
    Cat2Enumeration { cat1, pairs }
}

/// Every cat²-group on `G` in canonical orientation (`C₁ ≤ C₂`).
pub fn all_cat2_groups(g: &Arc<GroupTable>) -> Vec<Cat2Group> {
    let e = enumerate_cat2(g);
    (0..e.len()).map(|k| e.structure(k)).collect()
}

/// Cat¹ and cat² structures on one group with their isomorphism classes.
#[derive(Clone, Debug)]
pub struct Classification {
    pub cat2: Cat2Enumeration,
    pub cat1_families: Families,
    pub cat2_families: Families,
}

impl Classification {
    pub fn cat1(&self) -> &Cat1Enumeration {
        self.cat2.cat1()
    }

    /// Number of classes whose diagonal is not a cat¹-group. The verdict is
    /// an isomorphism invariant, so representatives suffice.
    pub fn bad_diagonal_classes(&self) -> usize {
        self.cat2_families.representatives().iter().filter(|&&k| !self.cat2.diagonal_is_cat1(k)).count()
    }
}

/// Orbits of `Aut(G)` on cat¹ structures and on unordered cat² pairs.
pub fn classify(g: &Arc<GroupTable>) -> Classification {
    let cat2 = enumerate_cat2(g);
    let auts = automorphism_group(cat2.group());
    classify_with(cat2, &auts)
}

pub(crate) fn classify_with(cat2: Cat2Enumeration, auts: &Automorphisms) -> Classification {
    let conj = Cat1Conjugator::new(cat2.cat1(), auts);
    let mut scratch = Vec::new();
    let cat1_families = Families::from_orbits(cat2.cat1().len(), |i| {
        (0..conj.automorphism_count()).map(|k| conj.apply(k, i, &mut scratch)).collect()
    });
    let cat2_families = Families::from_orbits(cat2.len(), |p| {
        let (i, j) = cat2.pairs()[p];
        (0..conj.automorphism_count())
            .map(|k| {
                let a = conj.apply(k, i as usize, &mut scratch);
                let b = conj.apply(k, j as usize, &mut scratch);
                cat2.position(a, b).expect("Aut(G) permutes the cat² structures")
            })
            .collect()
    });
    Classification { cat2, cat1_families, cat2_families }
}

/// Cat² classes on `G`: families of positions into [`enumerate_cat2`].
pub fn cat2_isomorphism_classes(g: &Arc<GroupTable>) -> (Cat2Enumeration, Families) {
    let c = classify(g);
    (c.cat2, c.cat2_families)
}

/// `γ: G → G′` with `γ∘t₁ = t₁′∘γ`, `γ∘h₁ = h₁′∘γ`, `γ∘t₂ = t₂′∘γ`,
/// `γ∘h₂ = h₂′∘γ`; `ρᵢ` are the restrictions `Rᵢ → Rᵢ′`.
#[derive(Clone, Debug)]
pub struct Cat2Morphism {
    pub source: Cat2Group,
    pub target: Cat2Group,
    pub gamma: Homomorphism,
    pub rho1: Homomorphism,
    pub rho2: Homomorphism,
}

fn intertwining_failure(a: &Cat2Group, b: &Cat2Group, f: &Homomorphism) -> Option<(&'static str, Elem)> {
    let g = a.group();
    let checks = [
        ("ρ₁∘t₁ = t₁′∘γ", a.first.tail(), b.first.tail()),
        ("ρ₁∘h₁ = h₁′∘γ", a.first.head(), b.first.head()),
        ("ρ₂∘t₂ = t₂′∘γ", a.second.tail(), b.second.tail()),
        ("ρ₂∘h₂ = h₂′∘γ", a.second.head(), b.second.head()),
    ];
    checks
        .iter()
        .find_map(|&(name, p, q)| disagreement(g, |x| f.apply(p.apply(x)), |x| q.apply(f.apply(x))).map(|w| (name, w)))
}

impl Cat2Morphism {
    pub fn new(source: &Cat2Group, target: &Cat2Group, gamma: Homomorphism) -> Result<Self> {
        if gamma.source().order() != source.group().order() || gamma.target().order() != target.group().order() {
            return Err(Error::GroupMismatch);
        }
        if let Some((identity, witness)) = intertwining_failure(source, target, &gamma) {
            return Err(Error::Identity { identity, witness });
        }
        let rho1 = gamma.restrict(source.r1(), target.r1())?;
        let rho2 = gamma.restrict(source.r2(), target.r2())?;
        Ok(Cat2Morphism { source: source.clone(), target: target.clone(), gamma, rho1, rho2 })
    }
}

/// Morphisms `A → B` with the orientations as given.
pub fn all_cat2_group_morphisms(a: &Cat2Group, b: &Cat2Group) -> Result<Vec<Cat2Morphism>> {
    let (ga, gb) = (a.group().dense()?, b.group().dense()?);
    all_homomorphisms(&ga, &gb)
        .into_iter()
        .filter(|f| intertwining_failure(a, b, f).is_none())
        .map(|f| Cat2Morphism::new(a, b, f.rebased(a.group(), b.group())))
        .collect()
}

/// An isomorphism from `A` to `B` or to its transpose; the target of the
/// returned morphism records which orientation matched.
pub fn isomorphism_cat2_groups(a: &Cat2Group, b: &Cat2Group) -> Result<Option<Cat2Morphism>> {
    let (ga, gb) = (a.group().dense()?, b.group().dense()?);
    let Some(phi) = isomorphism_between(&ga, &gb) else {
        return Ok(None);
    };
    let swapped = b.transpose();
    for alpha in automorphism_group(&ga).maps {
        let gamma = phi.compose(&alpha)?.rebased(a.group(), b.group());
        for target in [b, &swapped] {
            if intertwining_failure(a, target, &gamma).is_none() {
                return Cat2Morphism::new(a, target, gamma).map(Some);
            }
        }
    }
    Ok(None)
}

/// `n` pairwise commuting cat¹ structures on one group.
#[derive(Clone, Debug)]
pub struct CatNGroup {
    structures: Vec<Cat1Group>,
}

pub fn catn_group(structures: &[Cat1Group]) -> Result<CatNGroup> {
    let Some(first) = structures.first() else {
        return Err(Error::GroupMismatch);
    };
    let g = first.group();
    if structures.iter().any(|c| c.group().order() != g.order()) {
        return Err(Error::GroupMismatch);
    }
    for i in 0..structures.len() {
        for j in i + 1..structures.len() {
            let (a, b) = (&structures[i], &structures[j]);
            if let Some((identity, witness)) = commutation_failure(g, (a.tail(), a.head()), (b.tail(), b.head())) {
                return Err(Error::PairwiseIdentity { i, j, identity, witness });
            }
        }
    }
    Ok(CatNGroup { structures: structures.to_vec() })
}

impl CatNGroup {
    pub fn group(&self) -> &Arc<GroupTable> {
        self.structures[0].group()
    }

    pub fn structures(&self) -> &[Cat1Group] {
        &self.structures
    }

    /// `n + 1` for a cat^n-group.
    pub fn higher_dimension(&self) -> usize {
        self.structures.len() + 1
    }

    /// The cat²-group on structures `i` and `j` (0-based).
    pub fn face(&self, i: usize, j: usize) -> Result<Cat2Group> {
        let (a, b) = (self.structures.get(i), self.structures.get(j));
        match (a, b) {
            (Some(a), Some(b)) if i != j => Ok(Cat2Group::new_unchecked(a.clone(), b.clone())),
            _ => Err(Error::GroupMismatch),
        }
    }

    /// The face on the first two structures.
    pub fn front(&self) -> Result<Cat2Group> {
        self.face(0, 1)
    }
}
