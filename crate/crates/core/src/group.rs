//! Finite groups on dense element indices.
//!
//! Every group has elements `0..order` with `0` the identity. Small groups
//! carry a materialized multiplication table; a semidirect product may
//! instead stay *structural* and multiply index pairs on the fly, which is
//! how the 10,000-element groups produced from crossed squares are held.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::perm::Perm;

pub type Elem = u32;

/// Largest order for which a multiplication table is materialized.
pub const DENSE_CAP: usize = 2000;

pub enum Realization {
    /// Row-major `order × order` product table.
    Dense(Vec<Elem>),
    /// Pairs `(s, r)` encoded as `s + |S|·r`.
    Structural(SemidirectLayout),
}

pub struct SemidirectLayout {
    pub normal: Arc<GroupTable>,
    pub complement: Arc<GroupTable>,
    /// `action[r·|S| + s]` is `r ▷ s`.
    pub action: Vec<Elem>,
}

impl SemidirectLayout {
    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let ns = self.normal.order() as Elem;
        let (s1, r1) = (a % ns, a / ns);
        let (s2, r2) = (b % ns, b / ns);
        let acted = self.action[(r1 * ns + s2) as usize];
        self.normal.mul(s1, acted) + ns * self.complement.mul(r1, r2)
    }

    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        let ns = self.normal.order() as Elem;
        (x % ns, x / ns)
    }

    pub fn join(&self, s: Elem, r: Elem) -> Elem {
        s + self.normal.order() as Elem * r
    }
}

pub struct GroupTable {
    order: usize,
    inverse: Vec<Elem>,
    generators: Vec<Elem>,
    label: String,
    realization: Realization,
    perms: Option<Vec<Perm>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("dense", &self.is_dense())
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroupTable {
    pub fn trivial() -> Self {
        GroupTable {
            order: 1,
            inverse: vec![0],
            generators: vec![],
            label: "1".into(),
            realization: Realization::Dense(vec![0]),
            perms: None,
        }
    }

    /// Builds a dense group from a product table, checking closure, the
    /// identity, inverses and (via Light's test over `generators`)
    /// associativity. The generators must generate the whole group.
    pub fn from_table(table: Vec<Elem>, generators: Vec<Elem>, label: impl Into<String>) -> Result<Self> {
        let n = (table.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != table.len() {
            return Err(Error::NotAGroup(format!("table of length {} is not square", table.len())));
        }
        if n > DENSE_CAP {
            return Err(Error::TooLarge { order: n, cap: DENSE_CAP });
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let mut inverse = vec![Elem::MAX; n];
        for a in 0..n {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::NotAGroup(format!("0 is not a two-sided identity at {a}")));
            }
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = at(a, b);
                if c >= n || seen[c] {
                    return Err(Error::NotAGroup(format!("row {a} is not a permutation")));
                }
                seen[c] = true;
                if c == 0 {
                    inverse[a] = b as Elem;
                }
            }
            if at(inverse[a] as usize, a) != 0 {
                return Err(Error::NotAGroup(format!("{a} has no two-sided inverse")));
            }
        }
        if generators.iter().any(|&g| g as usize >= n) {
            return Err(Error::NotAGroup("generator out of range".into()));
        }
        let group = GroupTable {
            order: n,
            inverse,
            generators,
            label: label.into(),
            realization: Realization::Dense(table),
            perms: None,
        };
        if group.closure(&group.generators).iter().filter(|&&m| m).count() != n {
            return Err(Error::NotAGroup("generators do not generate the group".into()));
        }
        for &g in &group.generators {
            for x in 0..n as Elem {
                let xg = group.mul(x, g);
                for y in 0..n as Elem {
                    if group.mul(xg, y) != group.mul(x, group.mul(g, y)) {
                        return Err(Error::NotAGroup(format!("associativity fails at ({x}, {g}, {y})")));
                    }
                }
            }
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.realization, Realization::Dense(_))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.realization {
            Realization::Dense(t) => t[a as usize * self.order + b as usize],
            Realization::Structural(s) => s.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `a·b·a⁻¹·b⁻¹`
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inv(a)), self.inv(b))
    }

    /// `g·s·g⁻¹`
    pub fn conj(&self, g: Elem, s: Elem) -> Elem {
        self.mul(self.mul(g, s), self.inv(g))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The source permutation of each element, for groups built from
    /// permutations.
    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn find_perm(&self, p: &Perm) -> Option<Elem> {
        let perms = self.perms.as_ref()?;
        let deg = perms.first().map_or(0, Perm::degree);
        let p = p.extended(deg);
        perms.iter().position(|q| *q == p).map(|i| i as Elem)
    }

    /// Membership mask of the subgroup generated by `seed`.
    pub fn closure(&self, seed: &[Elem]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in seed {
                let y = self.mul(x, s);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// Materializes the product table, keeping element indices unchanged.
    pub fn densify(&self) -> Result<GroupTable> {
        if self.order > DENSE_CAP {
            return Err(Error::TooLarge { order: self.order, cap: DENSE_CAP });
        }
        let table = match &self.realization {
            Realization::Dense(t) => t.clone(),
            Realization::Structural(_) => {
                let mut t = Vec::with_capacity(self.order * self.order);
                for a in self.elements() {
                    for b in self.elements() {
                        t.push(self.mul(a, b));
                    }
                }
                t
            }
        };
        Ok(GroupTable {
            order: self.order,
            inverse: self.inverse.clone(),
            generators: self.generators.clone(),
            label: self.label.clone(),
            realization: Realization::Dense(table),
            perms: self.perms.clone(),
        })
    }

    /// Returns `self` when already dense, otherwise a densified copy.
    pub fn dense(self: &Arc<Self>) -> Result<Arc<GroupTable>> {
        if self.is_dense() {
            Ok(self.clone())
        } else {
            Ok(Arc::new(self.densify()?))
        }
    }

    pub fn table(&self) -> Option<&[Elem]> {
        match &self.realization {
            Realization::Dense(t) => Some(t),
            Realization::Structural(_) => None,
        }
    }

    /// Invariants used to rule out isomorphism cheaply.
    pub fn fingerprint(&self) -> Fingerprint {
        let mut histogram = HashMap::new();
        for o in self.element_orders() {
            *histogram.entry(o).or_insert(0usize) += 1;
        }
        let mut order_histogram: Vec<(usize, usize)> = histogram.into_iter().collect();
        order_histogram.sort_unstable();
        Fingerprint { order: self.order, abelian: self.is_abelian(), center: center(self).len(), order_histogram }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub center: usize,
    pub order_histogram: Vec<(usize, usize)>,
}

fn center(g: &GroupTable) -> Vec<Elem> {
    g.elements().filter(|&z| g.generators().iter().all(|&x| g.mul(z, x) == g.mul(x, z))).collect()
}

/// Dense group of the permutation group generated by `gens`, capped at
/// [`DENSE_CAP`] elements.
pub fn group_from_permutation_generators(gens: &[Perm], label: &str) -> Result<GroupTable> {
    group_from_permutation_generators_capped(gens, label, DENSE_CAP)
}

/// Elements are ordered identity first, then breadth-first over right
/// multiplication by the generators, each new layer sorted by image
/// arrays.
pub fn group_from_permutation_generators_capped(gens: &[Perm], label: &str, cap: usize) -> Result<GroupTable> {
    let degree = gens.iter().map(Perm::degree).max().unwrap_or(0);
    let gens: Vec<Perm> = gens.iter().map(|g| g.extended(degree)).collect();

    let identity = Perm::identity(degree);
    let mut index: HashMap<Perm, Elem> = HashMap::from([(identity.clone(), 0)]);
    let mut elems = vec![identity];
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next: HashSet<Perm> = HashSet::new();
        for &x in &layer {
            for g in &gens {
                let y = elems[x].then(g);
                if !index.contains_key(&y) {
                    next.insert(y);
                }
            }
        }
        let mut next: Vec<Perm> = next.into_iter().collect();
        next.sort();
        layer.clear();
        for p in next {
            if elems.len() >= cap {
                return Err(Error::TooLarge { order: elems.len() + 1, cap });
            }
            index.insert(p.clone(), elems.len() as Elem);
            layer.push(elems.len());
            elems.push(p);
        }
    }

    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&a.then(b)]);
        }
    }
    let mut generators: Vec<Elem> = Vec::new();
    for g in &gens {
        let i = index[g];
        if i != 0 && !generators.contains(&i) {
            generators.push(i);
        }
    }
    let mut group = GroupTable::from_table(table, generators, label)?;
    group.perms = Some(elems);
    Ok(group)
}

/// A subgroup as a sorted member set of its parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<GroupTable>,
    members: Vec<Elem>,
    mask: Vec<bool>,
    embedded: OnceLock<Embedded>,
}

/// A subgroup materialized as a group in its own right, with element `i`
/// of `group` corresponding to `members[i]` of the parent.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub group: Arc<GroupTable>,
    pub inclusion: Homomorphism,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("parent", &self.parent.label()).field("members", &self.members).finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent.order() == other.parent.order()
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_mask(parent: &Arc<GroupTable>, mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i as Elem).collect();
        Subgroup { parent: parent.clone(), members, mask, embedded: OnceLock::new() }
    }

    /// Smallest subgroup containing `seed`.
    pub fn generated(parent: &Arc<GroupTable>, seed: &[Elem]) -> Self {
        Self::from_mask(parent, parent.closure(seed))
    }

    /// Wraps a member set; returns `None` unless it is a subgroup.
    pub fn from_members(parent: &Arc<GroupTable>, members: &[Elem]) -> Option<Self> {
        let mut mask = vec![false; parent.order()];
        for &m in members {
            *mask.get_mut(m as usize)? = true;
        }
        if !mask[0] {
            return None;
        }
        let sub = Self::from_mask(parent, mask);
        let closed = sub.members.iter().all(|&a| sub.members.iter().all(|&b| sub.contains(parent.mul(a, b))));
        closed.then_some(sub)
    }

    pub fn trivial(parent: &Arc<GroupTable>) -> Self {
        Self::generated(parent, &[])
    }

    pub fn whole(parent: &Arc<GroupTable>) -> Self {
        Self::from_mask(parent, vec![true; parent.order()])
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x as usize]
    }

    /// Position of a parent element inside the embedded group.
    pub fn local_index(&self, x: Elem) -> Option<Elem> {
        self.members.binary_search(&x).ok().map(|i| i as Elem)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Self::from_mask(&self.parent, mask)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// `Err((g, s))` names a pair with `g·s·g⁻¹` outside the subgroup.
    pub fn normality_witness(&self) -> std::result::Result<(), (Elem, Elem)> {
        let g = &self.parent;
        for &x in g.generators() {
            for &s in &self.members {
                if !self.contains(g.conj(x, s)) {
                    return Err((x, s));
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_ok()
    }

    /// Greedy generating set: members in ascending order that are not yet
    /// in the span of the previously chosen ones.
    pub fn generators(&self) -> Vec<Elem> {
        greedy_generators(&self.parent, &self.members)
    }

    /// The subgroup as a dense group, computed once.
    pub fn embedded(&self) -> &Embedded {
        self.embedded.get_or_init(|| {
            let n = self.members.len();
            let p = &self.parent;
            let mut table = Vec::with_capacity(n * n);
            for &a in &self.members {
                for &b in &self.members {
                    table.push(self.local_index(p.mul(a, b)).expect("subgroup closed"));
                }
            }
            let gens = self.generators().iter().map(|&g| self.local_index(g).unwrap()).collect();
            let group = Arc::new(
                GroupTable::from_table(table, gens, format!("subgroup of {}", p.label()))
                    .expect("subgroup table is a group"),
            );
            let inclusion = Homomorphism::new_unchecked(group.clone(), p.clone(), self.members.clone());
            Embedded { group, inclusion }
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.embedded().group
    }
}

pub(crate) fn greedy_generators(g: &GroupTable, members: &[Elem]) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    for &m in members {
        if !mask[m as usize] {
            gens.push(m);
            mask = g.closure(&gens);
        }
    }
    gens
}

/// Smallest subgroup containing the seed set.
pub fn subgroup_generated(g: &Arc<GroupTable>, seed: &[Elem]) -> Subgroup {
    Subgroup::generated(g, seed)
}

/// Subgroup generated by all `a·b·a⁻¹·b⁻¹` with `a ∈ A`, `b ∈ B`.
pub fn commutator_subgroup(g: &Arc<GroupTable>, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut comms = Vec::new();
    for &x in a.members() {
        for &y in b.members() {
            let c = g.commutator(x, y);
            if c != 0 && !seen[c as usize] {
                seen[c as usize] = true;
                comms.push(c);
            }
        }
    }
    Subgroup::generated(g, &comms)
}

/// First pair `(a, b)` of subgroup generators that fails to commute.
/// `[A, B] = 1` exactly when this returns `None`.
pub fn noncommuting_pair(g: &GroupTable, a_gens: &[Elem], b_gens: &[Elem]) -> Option<(Elem, Elem)> {
    for &x in a_gens {
        for &y in b_gens {
            if g.mul(x, y) != g.mul(y, x) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn center_subgroup(g: &Arc<GroupTable>) -> Subgroup {
    let members = center(g);
    Subgroup::from_members(g, &members).expect("center is a subgroup")
}

/// `S ⋊ R` together with its canonical maps.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: Arc<GroupTable>,
    /// `s ↦ (s, 1)`
    pub embed_normal: Homomorphism,
    /// `r ↦ (1, r)`
    pub embed_complement: Homomorphism,
    /// `(s, r) ↦ r`
    pub project: Homomorphism,
}

/// Structural semidirect product on pairs with
/// `(s₁,r₁)(s₂,r₂) = (s₁·(r₁▷s₂), r₁r₂)`.
pub fn semidirect_product(
    normal: &Arc<GroupTable>,
    complement: &Arc<GroupTable>,
    act: &GroupAction,
) -> Result<SemidirectProduct> {
    if act.actor().order() != complement.order() || act.space().order() != normal.order() {
        return Err(Error::GroupMismatch);
    }
    let (ns, nr) = (normal.order(), complement.order());
    let order = ns.checked_mul(nr).ok_or(Error::TooLarge { order: usize::MAX, cap: DENSE_CAP })?;
    let layout =
        SemidirectLayout { normal: normal.clone(), complement: complement.clone(), action: act.table().to_vec() };
    let mut inverse = Vec::with_capacity(order);
    for x in 0..order as Elem {
        let (s, r) = layout.split(x);
        let ri = complement.inv(r);
        inverse.push(layout.join(act.apply(ri, normal.inv(s)), ri));
    }
    let mut generators: Vec<Elem> = normal.generators().iter().map(|&s| layout.join(s, 0)).collect();
    generators.extend(complement.generators().iter().map(|&r| layout.join(0, r)));
    let group = Arc::new(GroupTable {
        order,
        inverse,
        generators,
        label: format!("({} |X {})", complement.label(), normal.label()),
        realization: Realization::Structural(layout),
        perms: None,
    });
    let embed_normal = Homomorphism::new_unchecked(normal.clone(), group.clone(), normal.elements().collect());
    let embed_complement = Homomorphism::new_unchecked(
        complement.clone(),
        group.clone(),
        complement.elements().map(|r| r * ns as Elem).collect(),
    );
    let project = Homomorphism::new_unchecked(
        group.clone(),
        complement.clone(),
        group.elements().map(|x| x / ns as Elem).collect(),
    );
    Ok(SemidirectProduct { group, embed_normal, embed_complement, project })
}

/// Direct product, densified when it fits under the cap. Element `(a, b)`
/// has index `a + |A|·b`.
pub fn direct_product(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> Result<Arc<GroupTable>> {
    let sd = semidirect_product(a, b, &GroupAction::trivial(b, a))?;
    let label = format!("{} x {}", a.label(), b.label());
    if sd.group.order() <= DENSE_CAP {
        Ok(Arc::new(sd.group.densify()?.with_label(label)))
    } else {
        Ok(sd.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(cycles: &[&str]) -> Vec<Perm> {
        cycles.iter().map(|c| c.parse().unwrap()).collect()
    }

    fn d8() -> Arc<GroupTable> {
        Arc::new(group_from_permutation_generators(&perms(&["(1,2)(3,4)", "(1,3)"]), "D8").unwrap())
    }

    #[test]
    fn permutation_groups_have_expected_orders() {
        let c2 = group_from_permutation_generators(&perms(&["(1,2)"]), "C2").unwrap();
        assert_eq!(c2.order(), 2);
        let g = group_from_permutation_generators(
            &perms(&["(1,2,3,4)(5,6,7,8)", "(1,5)(2,6)(3,7)(4,8)", "(2,6)(4,8)"]),
            "c4c2:c2",
        )
        .unwrap();
        assert_eq!(g.order(), 16);
        let d20 =
            group_from_permutation_generators(&perms(&["(1,2,3,4,5,6,7,8,9,10)", "(2,10)(3,9)(4,8)(5,7)"]), "d20")
                .unwrap();
        assert_eq!(d20.order(), 20);
        assert_eq!(d20.generators().len(), 2);
    }

    #[test]
    fn element_zero_is_identity_and_layers_sorted() {
        let g = d8();
        assert!(g.perms().unwrap()[0].is_identity());
        for x in g.elements() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
        // first layer is the sorted generator set
        let p = g.perms().unwrap();
        assert!(p[1] < p[2]);
    }

    #[test]
    fn order_cap_is_enforced() {
        let s5 = perms(&["(1,2,3,4,5)", "(1,2)"]);
        let err = group_from_permutation_generators_capped(&s5, "S5", 100).unwrap_err();
        assert!(matches!(err, Error::TooLarge { cap: 100, .. }));
    }

    #[test]
    fn subgroup_generation() {
        let g = d8();
        assert!(Subgroup::generated(&g, &[]).is_trivial());
        assert_eq!(Subgroup::generated(&g, g.generators()).order(), 8);
        let d20 = Arc::new(
            group_from_permutation_generators(&perms(&["(1,2,3,4,5,6,7,8,9,10)", "(2,10)(3,9)(4,8)(5,7)"]), "d20")
                .unwrap(),
        );
        let p1 = d20.generators()[0];
        let p1 = if d20.element_order(p1) == 10 { p1 } else { d20.generators()[1] };
        assert_eq!(Subgroup::generated(&d20, &[d20.mul(p1, p1)]).order(), 5);
    }

    #[test]
    fn commutator_subgroups() {
        let g = d8();
        let triv = Subgroup::trivial(&g);
        let all = Subgroup::whole(&g);
        assert!(commutator_subgroup(&g, &all, &triv).is_trivial());
        assert_eq!(commutator_subgroup(&g, &all, &all).order(), 2);
    }

    #[test]
    fn from_table_rejects_non_groups() {
        // 0 is not an identity
        assert!(GroupTable::from_table(vec![1, 0, 0, 1], vec![1], "x").is_err());
        // not associative: a loop of order 5 that is not a group
        let t = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(GroupTable::from_table(t, vec![1, 2], "loop").is_err());
    }

    #[test]
    fn structural_and_dense_agree() {
        let c3 = Arc::new(group_from_permutation_generators(&perms(&["(1,2,3)"]), "C3").unwrap());
        let c2 = Arc::new(group_from_permutation_generators(&perms(&["(1,2)"]), "C2").unwrap());
        let inv: Vec<Elem> = c3.elements().map(|x| c3.inv(x)).collect();
        let act = GroupAction::from_generator_images(&c2, &c3, &[inv]).unwrap();
        let sd = semidirect_product(&c3, &c2, &act).unwrap();
        assert!(!sd.group.is_dense());
        let dense = sd.group.densify().unwrap();
        for a in sd.group.elements() {
            for b in sd.group.elements() {
                assert_eq!(sd.group.mul(a, b), dense.mul(a, b));
            }
            assert_eq!(sd.group.mul(a, sd.group.inv(a)), 0);
        }
        assert!(!dense.is_abelian());
    }
}
