//! Crossed squares
//!
//! ```text
//!   L --κ--> M
//!   |λ       |μ
//!   v        v
//!   N --ν--> P
//! ```
//!
//! with actions of `P` on `L`, `M`, `N` and a crossed pairing
//! `⋈: M × N → L`, plus the equivalence with cat²-groups.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{conjugation_action, GroupAction};
use crate::cat1::Cat1Group;
use crate::cat2::{cat2_group, Cat2Group};
use crate::error::{Error, Result};
use crate::group::{direct_product, semidirect_product, Elem, GroupTable, Subgroup, DENSE_CAP};
use crate::hom::{automorphism_group, Homomorphism};
use crate::report::Report;
use crate::xmod::{is_crossed_module, require_abelian, CrossedModule};

/// Above this many `(m, n)` pairs the axiom checker samples tuples.
pub const EXHAUSTIVE_LIMIT: usize = 10_000;
pub const SAMPLE_SIZE: usize = 10_000;
const SAMPLE_SEED: u64 = 0x5eed_0f_c405;

#[derive(Clone, Debug)]
pub struct CrossedSquare {
    kappa: Homomorphism,
    lambda: Homomorphism,
    mu: Homomorphism,
    nu: Homomorphism,
    act_l: GroupAction,
    act_m: GroupAction,
    act_n: GroupAction,
    /// `pairing[m·|N| + n] = m ⋈ n`
    pairing: Vec<Elem>,
}

impl PartialEq for CrossedSquare {
    fn eq(&self, other: &Self) -> bool {
        self.kappa == other.kappa
            && self.lambda == other.lambda
            && self.mu == other.mu
            && self.nu == other.nu
            && self.act_l.table() == other.act_l.table()
            && self.act_m.table() == other.act_m.table()
            && self.act_n.table() == other.act_n.table()
            && self.pairing == other.pairing
    }
}

impl CrossedSquare {
    /// Validated crossed square; fails with the full report otherwise.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        kappa: Homomorphism,
        lambda: Homomorphism,
        mu: Homomorphism,
        nu: Homomorphism,
        act_l: GroupAction,
        act_m: GroupAction,
        act_n: GroupAction,
        pairing: Vec<Elem>,
    ) -> Result<Self> {
        let x = Self::candidate(kappa, lambda, mu, nu, act_l, act_m, act_n, pairing)?;
        let report = is_crossed_square(&x);
        if report.is_valid() {
            Ok(x)
        } else {
            Err(Error::Axioms(report))
        }
    }

    /// Assembles the data after checking only that the groups line up.
    #[allow(clippy::too_many_arguments)]
    pub fn candidate(
        kappa: Homomorphism,
        lambda: Homomorphism,
        mu: Homomorphism,
        nu: Homomorphism,
        act_l: GroupAction,
        act_m: GroupAction,
        act_n: GroupAction,
        pairing: Vec<Elem>,
    ) -> Result<Self> {
        let (l, m, n, p) = (kappa.source(), kappa.target(), lambda.target(), mu.target());
        let same = |a: &Arc<GroupTable>, b: &Arc<GroupTable>| a.order() == b.order();
        let lined_up = same(lambda.source(), l)
            && same(mu.source(), m)
            && same(nu.source(), n)
            && same(nu.target(), p)
            && [&act_l, &act_m, &act_n].iter().all(|a| same(a.actor(), p))
            && same(act_l.space(), l)
            && same(act_m.space(), m)
            && same(act_n.space(), n)
            && pairing.len() == m.order() * n.order()
            && pairing.iter().all(|&x| (x as usize) < l.order());
        if !lined_up {
            return Err(Error::GroupMismatch);
        }
        Ok(CrossedSquare { kappa, lambda, mu, nu, act_l, act_m, act_n, pairing })
    }

    pub fn l(&self) -> &Arc<GroupTable> {
        self.kappa.source()
    }

    pub fn m(&self) -> &Arc<GroupTable> {
        self.kappa.target()
    }

    pub fn n(&self) -> &Arc<GroupTable> {
        self.lambda.target()
    }

    pub fn p(&self) -> &Arc<GroupTable> {
        self.mu.target()
    }

    pub fn kappa(&self) -> &Homomorphism {
        &self.kappa
    }

    pub fn lambda(&self) -> &Homomorphism {
        &self.lambda
    }

    pub fn mu(&self) -> &Homomorphism {
        &self.mu
    }

    pub fn nu(&self) -> &Homomorphism {
        &self.nu
    }

    pub fn action_on_l(&self) -> &GroupAction {
        &self.act_l
    }

    pub fn action_on_m(&self) -> &GroupAction {
        &self.act_m
    }

    pub fn action_on_n(&self) -> &GroupAction {
        &self.act_n
    }

    pub fn pairing(&self) -> &[Elem] {
        &self.pairing
    }

    /// `m ⋈ n`
    #[inline]
    pub fn pair(&self, m: Elem, n: Elem) -> Elem {
        self.pairing[m as usize * self.n().order() + n as usize]
    }

    /// `π = μ∘κ`
    pub fn diagonal(&self) -> Homomorphism {
        self.mu.compose(&self.kappa).expect("square lines up")
    }

    /// `[|L|, |M|, |N|, |P|]`
    pub fn size(&self) -> [usize; 4] {
        [self.l().order(), self.m().order(), self.n().order(), self.p().order()]
    }

    /// `M` acting on `N` through `μ`.
    fn m_on_n(&self, m: Elem, n: Elem) -> Elem {
        self.act_n.apply(self.mu.apply(m), n)
    }

    fn n_on_m(&self, n: Elem, m: Elem) -> Elem {
        self.act_m.apply(self.nu.apply(n), m)
    }

    fn m_on_l(&self, m: Elem, l: Elem) -> Elem {
        self.act_l.apply(self.mu.apply(m), l)
    }

    fn n_on_l(&self, n: Elem, l: Elem) -> Elem {
        self.act_l.apply(self.nu.apply(n), l)
    }

    /// The four edges and the diagonal as crossed-module candidates.
    pub fn edges(&self) -> [CrossedModule; 5] {
        let via = |act: &GroupAction, f: &Homomorphism| act.via(f).expect("square lines up");
        let xm = |d: &Homomorphism, a: GroupAction| CrossedModule::candidate(d.clone(), a).expect("square lines up");
        [
            xm(&self.kappa, via(&self.act_l, &self.mu)),
            xm(&self.lambda, via(&self.act_l, &self.nu)),
            xm(&self.mu, self.act_m.clone()),
            xm(&self.nu, self.act_n.clone()),
            xm(&self.diagonal(), self.act_l.clone()),
        ]
    }
}

/// Walks element tuples: every tuple when `exhaustive`, otherwise all
/// generator tuples followed by a fixed-seed random sample.
struct Tuples<'a> {
    groups: Vec<&'a GroupTable>,
    exhaustive: bool,
}

impl Tuples<'_> {
    fn find(&self, mut fails: impl FnMut(&[Elem]) -> bool) -> Option<Vec<Elem>> {
        let sizes: Vec<usize> = self.groups.iter().map(|g| g.order()).collect();
        let mut t = vec![0 as Elem; sizes.len()];
        if self.exhaustive {
            loop {
                if fails(&t) {
                    return Some(t);
                }
                let mut k = 0;
                loop {
                    if k == t.len() {
                        return None;
                    }
                    t[k] += 1;
                    if (t[k] as usize) < sizes[k] {
                        break;
                    }
                    t[k] = 0;
                    k += 1;
                }
            }
        }
        let gens: Vec<Vec<Elem>> =
            self.groups.iter().map(|g| std::iter::once(0).chain(g.generators().iter().copied()).collect()).collect();
        let mut idx = vec![0usize; gens.len()];
        loop {
            for (k, &i) in idx.iter().enumerate() {
                t[k] = gens[k][i];
            }
            if fails(&t) {
                return Some(t);
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
                if idx[k] < gens[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLE_SIZE {
            for (k, &s) in sizes.iter().enumerate() {
                t[k] = rng.gen_range(0..s as Elem);
            }
            if fails(&t) {
                return Some(t);
            }
        }
        None
    }
}

/// Checks commutativity of the square and the five crossed-square axioms.
/// Tuples are enumerated exhaustively when `|M|·|N| ≤ 10⁴` and sampled
/// otherwise.
pub fn is_crossed_square(x: &CrossedSquare) -> Report {
    let (l, m, n, p) = (x.l().as_ref(), x.m().as_ref(), x.n().as_ref(), x.p().as_ref());
    let exhaustive = m.order() * n.order() <= EXHAUSTIVE_LIMIT;
    fn tuples(groups: Vec<&GroupTable>, exhaustive: bool) -> Tuples<'_> {
        Tuples { groups, exhaustive }
    }
    let over = |groups| tuples(groups, exhaustive);
    let mut report = Report::new();

    let commutes = l.elements().find(|&a| x.mu.apply(x.kappa.apply(a)) != x.nu.apply(x.lambda.apply(a)));
    report.record("commutativity", commutes.map(|a| vec![a]));

    let names = ["axiom 1: kappa", "axiom 1: lambda", "axiom 1: mu", "axiom 1: nu", "axiom 1: pi"];
    for (name, edge) in names.into_iter().zip(x.edges()) {
        let r = is_crossed_module(&edge);
        report.record(name, r.failures().next().and_then(|c| c.witness.clone()));
    }
    let equivariant = |f: &Homomorphism, target: &GroupAction| {
        over(vec![p, l]).find(|t| f.apply(x.act_l.apply(t[0], t[1])) != target.apply(t[0], f.apply(t[1])))
    };
    report.record("axiom 1: kappa equivariant", equivariant(&x.kappa, &x.act_m));
    report.record("axiom 1: lambda equivariant", equivariant(&x.lambda, &x.act_n));

    let axiom2_left = over(vec![m, m, n]).find(|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let lhs = x.pair(m.mul(a, b), c);
        let rhs = l.mul(x.pair(m.conj(a, b), x.m_on_n(a, c)), x.pair(a, c));
        lhs != rhs
    });
    report.record("axiom 2: (mm′ ⋈ n)", axiom2_left);
    let axiom2_right = over(vec![m, n, n]).find(|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let lhs = x.pair(a, n.mul(b, c));
        let rhs = l.mul(x.pair(a, b), x.pair(x.n_on_m(b, a), n.conj(b, c)));
        lhs != rhs
    });
    report.record("axiom 2: (m ⋈ nn′)", axiom2_right);

    let axiom3_kappa =
        over(vec![m, n]).find(|t| x.kappa.apply(x.pair(t[0], t[1])) != m.mul(t[0], x.n_on_m(t[1], m.inv(t[0]))));
    report.record("axiom 3: κ(m ⋈ n)", axiom3_kappa);
    let axiom3_lambda =
        over(vec![m, n]).find(|t| x.lambda.apply(x.pair(t[0], t[1])) != n.mul(x.m_on_n(t[0], t[1]), n.inv(t[1])));
    report.record("axiom 3: λ(m ⋈ n)", axiom3_lambda);

    let axiom4_kappa =
        over(vec![l, n]).find(|t| x.pair(x.kappa.apply(t[0]), t[1]) != l.mul(t[0], x.n_on_l(t[1], l.inv(t[0]))));
    report.record("axiom 4: (κl ⋈ n)", axiom4_kappa);
    let axiom4_lambda =
        over(vec![m, l]).find(|t| x.pair(t[0], x.lambda.apply(t[1])) != l.mul(x.m_on_l(t[0], t[1]), l.inv(t[1])));
    report.record("axiom 4: (m ⋈ λl)", axiom4_lambda);

    let axiom5 = over(vec![p, m, n]).find(|t| {
        x.act_l.apply(t[0], x.pair(t[1], t[2])) != x.pair(x.act_m.apply(t[0], t[1]), x.act_n.apply(t[0], t[2]))
    });
    report.record("axiom 5", axiom5);
    report
}

/// Conjugation action of a subgroup `Q ≤ G` on a subgroup `S ≤ G` that it
/// normalizes, on the embedded groups.
fn conjugation_between(q: &Subgroup, s: &Subgroup) -> Result<GroupAction> {
    let g = q.parent();
    let mut table = Vec::with_capacity(q.order() * s.order());
    for &x in q.members() {
        for &y in s.members() {
            let z = g.conj(x, y);
            table.push(s.local_index(z).ok_or(Error::NotNormal { g: x, s: y })?);
        }
    }
    Ok(GroupAction::new_unchecked(q.group(), s.group(), table))
}

/// Commutator pairing `(m, n) ↦ m·n·m⁻¹·n⁻¹` landing in `L`.
fn commutator_pairing(m: &Subgroup, n: &Subgroup, l: &Subgroup) -> Result<Vec<Elem>> {
    let g = m.parent();
    let mut pairing = Vec::with_capacity(m.order() * n.order());
    for &a in m.members() {
        for &b in n.members() {
            pairing.push(l.local_index(g.commutator(a, b)).ok_or(Error::NotIntersection)?);
        }
    }
    Ok(pairing)
}

/// Inclusion square of normal subgroups `M`, `N` of `P` with
/// `L = M ∩ N`, conjugation actions and commutator pairing.
pub fn crossed_square_by_normal_subgroups(l: &Subgroup, m: &Subgroup, n: &Subgroup) -> Result<CrossedSquare> {
    let p = m.parent();
    if n.parent().order() != p.order() || l.parent().order() != p.order() {
        return Err(Error::GroupMismatch);
    }
    for s in [m, n] {
        if let Err((g, x)) = s.normality_witness() {
            return Err(Error::NotNormal { g, s: x });
        }
    }
    if *l != m.intersection(n) {
        return Err(Error::NotIntersection);
    }
    let kappa = Homomorphism::identity(p).restrict(l, m)?;
    let lambda = Homomorphism::identity(p).restrict(l, n)?;
    let mu = m.embedded().inclusion.clone();
    let nu = n.embedded().inclusion.clone();
    CrossedSquare::new(
        kappa,
        lambda,
        mu,
        nu,
        conjugation_action(p, l)?,
        conjugation_action(p, m)?,
        conjugation_action(p, n)?,
        commutator_pairing(m, n, l)?,
    )
}

/// `M → Inn M → Aut M` on both sides, with `α(m) = β_m` conjugation by
/// `m` and pairing `(β_m, β_{m′}) ↦ [m, m′]`.
pub fn actor_crossed_square(m: &Arc<GroupTable>) -> Result<CrossedSquare> {
    let auts = automorphism_group(m);
    let (aut, natural) = auts.as_group()?;
    let beta: Vec<Elem> = m
        .elements()
        .map(|x| {
            let conj: Vec<Elem> = m.elements().map(|y| m.conj(x, y)).collect();
            auts.position(&conj).expect("inner automorphism") as Elem
        })
        .collect();
    let inn = Subgroup::from_members(&aut, &beta).expect("Inn M is a subgroup");
    let alpha_map: Vec<Elem> = beta.iter().map(|&b| inn.local_index(b).expect("in Inn M")).collect();
    let alpha = Homomorphism::new(m, inn.group(), alpha_map)?;
    let iota = inn.embedded().inclusion.clone();
    let on_inn = conjugation_action(&aut, &inn)?;
    // one representative per inner automorphism; the pairing is independent
    // of the choice because representatives differ by central elements
    let mut rep = vec![Elem::MAX; inn.order()];
    for x in m.elements() {
        let k = alpha.apply(x) as usize;
        if rep[k] == Elem::MAX {
            rep[k] = x;
        }
    }
    let mut pairing = Vec::with_capacity(inn.order() * inn.order());
    for &a in &rep {
        for &b in &rep {
            pairing.push(m.commutator(a, b));
        }
    }
    for x in m.elements() {
        for y in m.elements() {
            let (a, b) = (rep[alpha.apply(x) as usize], rep[alpha.apply(y) as usize]);
            if m.commutator(x, y) != m.commutator(a, b) {
                return Err(Error::Identity { identity: "pairing independent of representatives", witness: x });
            }
        }
    }
    CrossedSquare::new(alpha.clone(), alpha, iota.clone(), iota, natural, on_inn.clone(), on_inn, pairing)
}

/// Zero boundaries out of an abelian `A` on which `P` acts trivially,
/// into `P`-modules `M` and `N`, with the trivial pairing.
pub fn trivial_action_crossed_square(
    a: &Arc<GroupTable>,
    act_m: GroupAction,
    act_n: GroupAction,
) -> Result<CrossedSquare> {
    let (m, n, p) = (act_m.space().clone(), act_n.space().clone(), act_m.actor().clone());
    if act_n.actor().order() != p.order() {
        return Err(Error::GroupMismatch);
    }
    for g in [a, &m, &n] {
        require_abelian(g)?;
    }
    CrossedSquare::new(
        Homomorphism::zero(a, &m),
        Homomorphism::zero(a, &n),
        Homomorphism::zero(&m, &p),
        Homomorphism::zero(&n, &p),
        GroupAction::trivial(&p, a),
        act_m,
        act_n,
        vec![0; m.order() * n.order()],
    )
}

fn product_map(
    f1: &Homomorphism,
    f2: &Homomorphism,
    source: &Arc<GroupTable>,
    target: &Arc<GroupTable>,
) -> Homomorphism {
    let (ns, nt) = (f1.source().order() as Elem, f1.target().order() as Elem);
    let map = source.elements().map(|x| f1.apply(x % ns) + nt * f2.apply(x / ns)).collect();
    Homomorphism::new_unchecked(source.clone(), target.clone(), map)
}

fn product_action(a1: &GroupAction, a2: &GroupAction, actor: &Arc<GroupTable>, space: &Arc<GroupTable>) -> GroupAction {
    let (np, ns) = (a1.actor().order() as Elem, a1.space().order() as Elem);
    let mut table = Vec::with_capacity(actor.order() * space.order());
    for q in actor.elements() {
        table.extend(space.elements().map(|s| a1.apply(q % np, s % ns) + ns * a2.apply(q / np, s / ns)));
    }
    GroupAction::new_unchecked(actor, space, table)
}

/// Componentwise product; each corner element `(x₁, x₂)` has index
/// `x₁ + |X₁|·x₂`.
pub fn direct_product_xsq(x1: &CrossedSquare, x2: &CrossedSquare) -> Result<CrossedSquare> {
    let l = direct_product(x1.l(), x2.l())?;
    let m = direct_product(x1.m(), x2.m())?;
    let n = direct_product(x1.n(), x2.n())?;
    let p = direct_product(x1.p(), x2.p())?;
    let (nm1, nn1, nl1) = (x1.m().order() as Elem, x1.n().order() as Elem, x1.l().order() as Elem);
    let mut pairing = Vec::with_capacity(m.order() * n.order());
    for a in m.elements() {
        pairing.extend(n.elements().map(|b| x1.pair(a % nm1, b % nn1) + nl1 * x2.pair(a / nm1, b / nn1)));
    }
    CrossedSquare::new(
        product_map(&x1.kappa, &x2.kappa, &l, &m),
        product_map(&x1.lambda, &x2.lambda, &l, &n),
        product_map(&x1.mu, &x2.mu, &m, &p),
        product_map(&x1.nu, &x2.nu, &n, &p),
        product_action(&x1.act_l, &x2.act_l, &p, &l),
        product_action(&x1.act_m, &x2.act_m, &p, &m),
        product_action(&x1.act_n, &x2.act_n, &p, &n),
        pairing,
    )
}

/// Swaps `M` and `N` with pairing `(n, m) ↦ (m ⋈ n)⁻¹`.
pub fn transpose_xsq(x: &CrossedSquare) -> Result<CrossedSquare> {
    let (m, n, l) = (x.m(), x.n(), x.l());
    let mut pairing = Vec::with_capacity(m.order() * n.order());
    for b in n.elements() {
        pairing.extend(m.elements().map(|a| l.inv(x.pair(a, b))));
    }
    CrossedSquare::new(
        x.lambda.clone(),
        x.kappa.clone(),
        x.nu.clone(),
        x.mu.clone(),
        x.act_l.clone(),
        x.act_n.clone(),
        x.act_m.clone(),
        pairing,
    )
}

/// Corners `L = ker t₁ ∩ ker t₂`, `M = im t₁ ∩ ker t₂`, `N = ker t₁ ∩ im t₂`,
/// `P = im t₁ ∩ im t₂`; edges `κ = h₁|L`, `λ = h₂|L`, `μ = h₂|M`,
/// `ν = h₁|N`; conjugation actions and commutator pairing in `G`.
pub fn crossed_square_of_cat2(c: &Cat2Group) -> Result<CrossedSquare> {
    let (c1, c2) = (c.first(), c.second());
    let (k1, k2) = (c1.tail().kernel(), c2.tail().kernel());
    let (i1, i2) = (c1.range(), c2.range());
    let l = k1.intersection(&k2);
    let m = i1.intersection(&k2);
    let n = k1.intersection(i2);
    let p = i1.intersection(i2);
    let kappa = c1.head().restrict(&l, &m)?;
    let lambda = c2.head().restrict(&l, &n)?;
    let mu = c2.head().restrict(&m, &p)?;
    let nu = c1.head().restrict(&n, &p)?;
    CrossedSquare::new(
        kappa,
        lambda,
        mu,
        nu,
        conjugation_between(&p, &l)?,
        conjugation_between(&p, &m)?,
        conjugation_between(&p, &n)?,
        commutator_pairing(&m, &n, &l)?,
    )
}

fn semidirect_group(
    normal: &Arc<GroupTable>,
    complement: &Arc<GroupTable>,
    act: &GroupAction,
) -> Result<Arc<GroupTable>> {
    let sd = semidirect_product(normal, complement, act)?;
    if sd.group.order() <= DENSE_CAP {
        sd.group.dense()
    } else {
        Ok(sd.group)
    }
}

/// `G = (L⋊N) ⋊ (M⋊P)` with
/// `(m,p)▷(l,n) = (ᵐ(ᵖl)·(m ⋈ ᵖn), ᵖn)`. Elements are indexed
/// `(l + |L|·n) + |L⋊N|·(m + |M|·p)`, and the group stays structural
/// above the dense cap.
pub fn cat2_of_crossed_square(x: &CrossedSquare) -> Result<Cat2Group> {
    let (l, m, n, p) = (x.l(), x.m(), x.n(), x.p());
    let (nl, nm) = (l.order() as Elem, m.order() as Elem);
    let ln = semidirect_group(l, n, &x.act_l.via(&x.nu)?)?;
    let mp = semidirect_group(m, p, &x.act_m)?;
    let nln = ln.order() as Elem;
    let mut table = Vec::with_capacity(mp.order() * ln.order());
    for y in mp.elements() {
        let (a, q) = (y % nm, y / nm);
        for z in ln.elements() {
            let (b, c) = (z % nl, z / nl);
            let qc = x.act_n.apply(q, c);
            let lpart = l.mul(x.m_on_l(a, x.act_l.apply(q, b)), x.pair(a, qc));
            table.push(lpart + nl * qc);
        }
    }
    let outer = GroupAction::new(&mp, &ln, table)?;
    let g = semidirect_group(&ln, &mp, &outer)?;
    let split = |e: Elem| {
        let (z, y) = (e % nln, e / nln);
        (z % nl, z / nl, y % nm, y / nm)
    };
    let join = |b: Elem, c: Elem, a: Elem, q: Elem| (b + nl * c) + nln * (a + nm * q);
    let endo = |f: &dyn Fn(Elem, Elem, Elem, Elem) -> Elem| -> Result<Homomorphism> {
        let map = g
            .elements()
            .map(|e| {
                let (b, c, a, q) = split(e);
                f(b, c, a, q)
            })
            .collect();
        Homomorphism::new(&g, &g, map)
    };
    let t1 = endo(&|_, _, a, q| join(0, 0, a, q))?;
    let h1 = endo(&|b, c, a, q| {
        let boundary = x.kappa.apply(b) + nm * x.nu.apply(c);
        let y = mp.mul(boundary, a + nm * q);
        join(0, 0, y % nm, y / nm)
    })?;
    let t2 = endo(&|_, c, _, q| join(0, c, 0, q))?;
    let h2 = endo(&|b, c, a, q| join(0, n.mul(x.lambda.apply(b), c), 0, p.mul(x.mu.apply(a), q)))?;
    cat2_group(&Cat1Group::new(&t1, &h1)?, &Cat1Group::new(&t2, &h2)?)
}
