//! Cat¹-groups `(G; t, h)` in endomorphism form, their enumeration and
//! classification, and the equivalence with crossed modules.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::group::{noncommuting_pair, semidirect_product, Elem, GroupTable, Subgroup, DENSE_CAP};
use crate::hom::{all_homomorphisms, automorphism_group, idempotent_endomorphisms, Automorphisms, Homomorphism};
use crate::report::Report;
use crate::xmod::CrossedModule;

/// First generator `g` of `G` with `lhs(g) != rhs(g)`. Two homomorphisms
/// out of `G` agree exactly when this is `None`.
pub(crate) fn disagreement(g: &GroupTable, lhs: impl Fn(Elem) -> Elem, rhs: impl Fn(Elem) -> Elem) -> Option<Elem> {
    g.generators().iter().copied().find(|&x| lhs(x) != rhs(x))
}

/// `(G; t, h)` with `t∘h = h` and `h∘t = t`.
#[derive(Clone, Debug)]
pub struct PreCat1Group {
    t: Homomorphism,
    h: Homomorphism,
    range: Subgroup,
}

impl PreCat1Group {
    pub fn group(&self) -> &Arc<GroupTable> {
        self.t.source()
    }

    pub fn tail(&self) -> &Homomorphism {
        &self.t
    }

    pub fn head(&self) -> &Homomorphism {
        &self.h
    }

    /// The common image of `t` and `h`.
    pub fn range(&self) -> &Subgroup {
        &self.range
    }

    /// A pair from `ker t × ker h` that fails to commute, if any.
    pub fn kernel_commutator_witness(&self) -> Option<(Elem, Elem)> {
        let g = self.group();
        noncommuting_pair(g, &self.t.kernel().generators(), &self.h.kernel().generators())
    }

    pub fn is_cat1(&self) -> bool {
        self.kernel_commutator_witness().is_none()
    }
}

pub fn pre_cat1_by_endomorphisms(t: &Homomorphism, h: &Homomorphism) -> Result<PreCat1Group> {
    let g = t.source();
    let endo = |f: &Homomorphism| f.source().order() == g.order() && f.target().order() == g.order();
    if !endo(t) || !endo(h) {
        return Err(Error::GroupMismatch);
    }
    if let Some(x) = disagreement(g, |x| t.apply(h.apply(x)), |x| h.apply(x)) {
        return Err(Error::Identity { identity: "t∘h = h", witness: x });
    }
    if let Some(x) = disagreement(g, |x| h.apply(t.apply(x)), |x| t.apply(x)) {
        return Err(Error::Identity { identity: "h∘t = t", witness: x });
    }
    let range = t.image();
    debug_assert!(range == h.image());
    Ok(PreCat1Group { t: t.clone(), h: h.clone(), range })
}

/// Noncommuting pair from `ker t × ker h`; `None` means the pre-cat¹-group
/// is a cat¹-group.
pub fn is_cat1_group(c: &PreCat1Group) -> Option<(Elem, Elem)> {
    c.kernel_commutator_witness()
}

/// Every cat¹ condition on a pair of endomorphisms, with witnesses:
/// idempotence, `t∘h = h`, `h∘t = t` and `[ker t, ker h] = 1`.
pub fn cat1_report(t: &Homomorphism, h: &Homomorphism) -> Report {
    let g = t.source();
    let mut report = Report::new();
    for (name, f) in [("t∘t = t", t), ("h∘h = h", h)] {
        report.record(name, disagreement(g, |x| f.apply(f.apply(x)), |x| f.apply(x)).map(|w| vec![w]));
    }
    report.record("t∘h = h", disagreement(g, |x| t.apply(h.apply(x)), |x| h.apply(x)).map(|w| vec![w]));
    report.record("h∘t = t", disagreement(g, |x| h.apply(t.apply(x)), |x| t.apply(x)).map(|w| vec![w]));
    let witness = noncommuting_pair(g, &t.kernel().generators(), &h.kernel().generators());
    report.record("[ker t, ker h] = 1", witness.map(|(a, b)| vec![a, b]));
    report
}

/// A pre-cat¹-group with `[ker t, ker h] = 1`.
#[derive(Clone, Debug)]
pub struct Cat1Group {
    pre: PreCat1Group,
}

impl Cat1Group {
    pub fn new(t: &Homomorphism, h: &Homomorphism) -> Result<Self> {
        Self::from_pre(pre_cat1_by_endomorphisms(t, h)?)
    }

    pub fn from_pre(pre: PreCat1Group) -> Result<Self> {
        match pre.kernel_commutator_witness() {
            Some((a, b)) => Err(Error::KernelCommutator(a, b)),
            None => Ok(Cat1Group { pre }),
        }
    }

    pub(crate) fn new_unchecked(t: Homomorphism, h: Homomorphism) -> Self {
        let range = t.image();
        Cat1Group { pre: PreCat1Group { t, h, range } }
    }

    pub fn as_pre(&self) -> &PreCat1Group {
        &self.pre
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.pre.group()
    }

    pub fn tail(&self) -> &Homomorphism {
        &self.pre.t
    }

    pub fn head(&self) -> &Homomorphism {
        &self.pre.h
    }

    pub fn range(&self) -> &Subgroup {
        &self.pre.range
    }

    /// `[|G|, |R|]`
    pub fn size(&self) -> [usize; 2] {
        [self.group().order(), self.range().order()]
    }

    /// The embedding form `(e; t, h)` with `e: R → G` the inclusion of the
    /// range and `t, h: G → R`.
    pub fn general_form(&self) -> GeneralCat1 {
        let range = self.range();
        let g = self.group();
        let corestrict = |f: &Homomorphism| {
            let map = f.map().iter().map(|&y| range.local_index(y).expect("image lies in range")).collect();
            Homomorphism::new_unchecked(g.clone(), range.group().clone(), map)
        };
        GeneralCat1 {
            embedding: range.embedded().inclusion.clone(),
            tail: corestrict(self.tail()),
            head: corestrict(self.head()),
        }
    }
}

/// Cat¹ data with a separate range group: `e: R → G`, `t, h: G → R`.
#[derive(Clone, Debug)]
pub struct GeneralCat1 {
    pub embedding: Homomorphism,
    pub tail: Homomorphism,
    pub head: Homomorphism,
}

/// Checks `e` injective, `t∘e∘h = h`, `h∘e∘t = t` and the kernel
/// condition, and returns the endomorphism form `(e∘t, e∘h)`.
pub fn from_general_form(e: &Homomorphism, t: &Homomorphism, h: &Homomorphism) -> Result<Cat1Group> {
    let (r, g) = (e.source(), e.target());
    let fits = |f: &Homomorphism| f.source().order() == g.order() && f.target().order() == r.order();
    if !fits(t) || !fits(h) {
        return Err(Error::GroupMismatch);
    }
    if !e.is_injective() {
        return Err(Error::NotInjective);
    }
    if let Some(x) = disagreement(g, |x| t.apply(e.apply(h.apply(x))), |x| h.apply(x)) {
        return Err(Error::Identity { identity: "t∘e∘h = h", witness: x });
    }
    if let Some(x) = disagreement(g, |x| h.apply(e.apply(t.apply(x))), |x| t.apply(x)) {
        return Err(Error::Identity { identity: "h∘e∘t = t", witness: x });
    }
    Cat1Group::new(&e.compose(t)?, &e.compose(h)?)
}

/// All cat¹ structures on one group, as index pairs into its idempotent
/// endomorphisms. Pairs are ordered lexicographically, which is the order
/// of `(t-map, h-map)`.
#[derive(Clone, Debug)]
pub struct Cat1Enumeration {
    group: Arc<GroupTable>,
    idempotents: Vec<Homomorphism>,
    pairs: Vec<(u32, u32)>,
}

impl Cat1Enumeration {
    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn idempotents(&self) -> &[Homomorphism] {
        &self.idempotents
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

    pub fn tail(&self, i: usize) -> &Homomorphism {
        &self.idempotents[self.pairs[i].0 as usize]
    }

    pub fn head(&self, i: usize) -> &Homomorphism {
        &self.idempotents[self.pairs[i].1 as usize]
    }

    pub fn structure(&self, i: usize) -> Cat1Group {
        Cat1Group::new_unchecked(self.tail(i).clone(), self.head(i).clone())
    }

    pub fn structures(&self) -> Vec<Cat1Group> {
        (0..self.len()).map(|i| self.structure(i)).collect()
    }

    /// Position of the structure with the given tail and head maps.
    pub fn position(&self, t: &[Elem], h: &[Elem]) -> Option<usize> {
        let find = |m: &[Elem]| self.idempotents.binary_search_by(|f| f.map().cmp(m)).ok();
        let pair = (find(t)? as u32, find(h)? as u32);
        self.pairs.binary_search(&pair).ok()
    }

    /// Key identifying structure `i` by its generator images.
    pub(crate) fn key(&self, i: usize) -> Vec<Elem> {
        let gens = self.group.generators();
        let (t, h) = (self.tail(i), self.head(i));
        gens.iter().map(|&x| t.apply(x)).chain(gens.iter().map(|&x| h.apply(x))).collect()
    }
}

/// Enumerates all ordered pairs `(t, h)` of idempotent endomorphisms that
/// form a cat¹-group.
pub fn enumerate_cat1(g: &Arc<GroupTable>) -> Cat1Enumeration {
    let g = g.dense().expect("enumeration needs a dense group");
    let idempotents = idempotent_endomorphisms(&g);
    let gens = g.generators();
    let images: Vec<Vec<bool>> = idempotents
        .iter()
        .map(|f| {
            let mut mask = vec![false; g.order()];
            f.map().iter().for_each(|&y| mask[y as usize] = true);
            mask
        })
        .collect();
    let kernel_gens: Vec<Vec<Elem>> = idempotents.iter().map(|f| f.kernel().generators()).collect();
    // t∘h = h and h∘t = t force equal images, so only same-image pairs qualify
    let mut by_image: HashMap<&[bool], Vec<u32>> = HashMap::new();
    for (i, mask) in images.iter().enumerate() {
        by_image.entry(mask.as_slice()).or_default().push(i as u32);
    }
    let pairs: Vec<(u32, u32)> = (0..idempotents.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let t = &idempotents[i];
            let same = &by_image[images[i].as_slice()];
            let (g, idempotents, kernel_gens) = (&g, &idempotents, &kernel_gens);
            same.iter().copied().filter_map(move |j| {
                let h = &idempotents[j as usize];
                let composable =
                    gens.iter().all(|&x| t.apply(h.apply(x)) == h.apply(x) && h.apply(t.apply(x)) == t.apply(x));
                (composable && noncommuting_pair(g, &kernel_gens[i], &kernel_gens[j as usize]).is_none())
                    .then_some((i as u32, j))
            })
        })
        .collect();
    Cat1Enumeration { group: g, idempotents, pairs }
}

/// Every cat¹-group on `G`, ordered by `(t-map, h-map)`.
pub fn all_cat1_groups(g: &Arc<GroupTable>) -> Vec<Cat1Group> {
    enumerate_cat1(g).structures()
}

/// `α∘f∘α⁻¹` on the generators of `G`, given `α` and `α⁻¹` as maps.
#[inline]
pub(crate) fn conjugate_on_generators(
    gens: &[Elem],
    alpha: &[Elem],
    alpha_inv: &[Elem],
    f: &Homomorphism,
    out: &mut Vec<Elem>,
) {
    out.extend(gens.iter().map(|&x| alpha[f.apply(alpha_inv[x as usize]) as usize]));
}

pub(crate) fn inverse_maps(auts: &Automorphisms) -> Vec<Vec<Elem>> {
    auts.maps.iter().map(|a| a.inverse().expect("automorphism").map().to_vec()).collect()
}

/// Partition of a canonical enumeration into orbits. Each family lists
/// positions in increasing order, and families are sorted by their least
/// member, which is the class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Families(pub Vec<Vec<usize>>);

impl Families {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.0.iter().map(|f| f[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.0.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Orbit partition of `0..n`, where `orbit(i)` lists the images of `i`
    /// under every group element.
    pub(crate) fn from_orbits(n: usize, mut orbit: impl FnMut(usize) -> Vec<usize>) -> Self {
        let mut visited = vec![false; n];
        let mut families = Vec::new();
        for i in 0..n {
            if visited[i] {
                continue;
            }
            let mut family = orbit(i);
            family.sort_unstable();
            family.dedup();
            for &k in &family {
                visited[k] = true;
            }
            debug_assert_eq!(family[0], i);
            families.push(family);
        }
        Families(families)
    }
}

/// Cat¹ structures on `G` up to isomorphism, under the action of `Aut(G)`
/// by `(t, h) ↦ (αtα⁻¹, αhα⁻¹)`.
#[derive(Clone, Debug)]
pub struct Cat1Classes {
    pub enumeration: Cat1Enumeration,
    pub families: Families,
}

pub fn cat1_isomorphism_classes(g: &Arc<GroupTable>) -> Cat1Classes {
    let enumeration = enumerate_cat1(g);
    let auts = automorphism_group(enumeration.group());
    let families = cat1_orbits(&enumeration, &auts);
    Cat1Classes { enumeration, families }
}

/// Images of each cat¹ structure under `Aut(G)`, computed on demand.
pub(crate) struct Cat1Conjugator<'a> {
    enumeration: &'a Cat1Enumeration,
    auts: &'a Automorphisms,
    inverses: Vec<Vec<Elem>>,
    lookup: HashMap<Vec<Elem>, u32>,
}

impl<'a> Cat1Conjugator<'a> {
    pub(crate) fn new(enumeration: &'a Cat1Enumeration, auts: &'a Automorphisms) -> Self {
        let lookup = (0..enumeration.len()).map(|i| (enumeration.key(i), i as u32)).collect();
        Cat1Conjugator { enumeration, auts, inverses: inverse_maps(auts), lookup }
    }

    pub(crate) fn automorphism_count(&self) -> usize {
        self.auts.len()
    }

    /// Position of `α_k · C_i`.
    pub(crate) fn apply(&self, k: usize, i: usize, scratch: &mut Vec<Elem>) -> usize {
        let gens = self.enumeration.group().generators();
        let alpha = self.auts.maps[k].map();
        scratch.clear();
        conjugate_on_generators(gens, alpha, &self.inverses[k], self.enumeration.tail(i), scratch);
        conjugate_on_generators(gens, alpha, &self.inverses[k], self.enumeration.head(i), scratch);
        *self.lookup.get(scratch.as_slice()).expect("Aut(G) permutes the cat¹ structures") as usize
    }
}

fn cat1_orbits(enumeration: &Cat1Enumeration, auts: &Automorphisms) -> Families {
    let conj = Cat1Conjugator::new(enumeration, auts);
    let mut scratch = Vec::new();
    Families::from_orbits(enumeration.len(), |i| {
        (0..conj.automorphism_count()).map(|k| conj.apply(k, i, &mut scratch)).collect()
    })
}

/// `S = ker t`, `R = im t`, `∂ = h|S`, with `R` acting on `S` by
/// conjugation in `G`.
pub fn xmod_of_cat1(c: &Cat1Group) -> Result<CrossedModule> {
    let g = c.group();
    let (s, r) = (c.tail().kernel(), c.range().clone());
    let boundary = c.head().restrict(&s, &r)?;
    let mut table = Vec::with_capacity(s.order() * r.order());
    for &x in r.members() {
        table.extend(s.members().iter().map(|&y| s.local_index(g.conj(x, y)).expect("ker t is normal")));
    }
    let action = GroupAction::new(r.group(), s.group(), table)?;
    CrossedModule::new(boundary, action)
}

/// `G = S ⋊ R` with `t(s, r) = (1, r)` and `h(s, r) = (1, ∂(s)·r)`. The
/// group is densified when it fits under the cap; indices are `s + |S|·r`
/// either way.
pub fn cat1_of_xmod(x: &CrossedModule) -> Result<Cat1Group> {
    let sd = semidirect_product(x.source(), x.range(), x.action())?;
    let g = if sd.group.order() <= DENSE_CAP { sd.group.dense()? } else { sd.group.clone() };
    let ns = x.source().order() as Elem;
    let r = x.range();
    let t = g.elements().map(|e| (e / ns) * ns).collect();
    let h = g.elements().map(|e| ns * r.mul(x.boundary().apply(e % ns), e / ns)).collect();
    Cat1Group::new(&Homomorphism::new(&g, &g, t)?, &Homomorphism::new(&g, &g, h)?)
}

/// `f: G₁ → G₂` with `f∘t₁ = t₂∘f` and `f∘h₁ = h₂∘f`.
#[derive(Clone, Debug)]
pub struct Cat1Morphism {
    pub source: Cat1Group,
    pub target: Cat1Group,
    pub map: Homomorphism,
}

impl Cat1Morphism {
    pub fn new(source: &Cat1Group, target: &Cat1Group, map: Homomorphism) -> Result<Self> {
        if map.source().order() != source.group().order() || map.target().order() != target.group().order() {
            return Err(Error::GroupMismatch);
        }
        if let Some(x) = intertwining_failure(source, target, &map) {
            return Err(Error::Identity { identity: "f∘t₁ = t₂∘f and f∘h₁ = h₂∘f", witness: x });
        }
        Ok(Cat1Morphism { source: source.clone(), target: target.clone(), map })
    }
}

fn intertwining_failure(a: &Cat1Group, b: &Cat1Group, f: &Homomorphism) -> Option<Elem> {
    disagreement(a.group(), |x| f.apply(a.tail().apply(x)), |x| b.tail().apply(f.apply(x)))
        .or_else(|| disagreement(a.group(), |x| f.apply(a.head().apply(x)), |x| b.head().apply(f.apply(x))))
}

pub fn all_cat1_morphisms(a: &Cat1Group, b: &Cat1Group) -> Result<Vec<Cat1Morphism>> {
    let (ga, gb) = (a.group().dense()?, b.group().dense()?);
    Ok(all_homomorphisms(&ga, &gb)
        .into_iter()
        .filter(|f| intertwining_failure(a, b, f).is_none())
        .map(|f| Cat1Morphism { source: a.clone(), target: b.clone(), map: f.rebased(a.group(), b.group()) })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::small_group;
    use crate::group::commutator_subgroup;
    use crate::testutil::d8_maps;
    use crate::xmod::{conjugation_xmod, is_crossed_module};

    #[test]
    fn d8_example_structures() {
        let (d8, a, b, ta, tb) = d8_maps();
        assert_eq!(ta.kernel().order(), 4);
        assert_eq!(ta.image().members(), Subgroup::generated(&d8, &[a]).members());
        let ca = Cat1Group::new(&ta, &ta).unwrap();
        let x = xmod_of_cat1(&ca).unwrap();
        assert_eq!(x.size(), [4, 2]);
        let diag = ta.compose(&tb).unwrap();
        let pre = pre_cat1_by_endomorphisms(&diag, &diag).unwrap();
        let (u, v) = is_cat1_group(&pre).expect("diagonal is not cat¹");
        let c = d8.commutator(a, b);
        assert_eq!(d8.commutator(u, v), c);
        let comm = commutator_subgroup(&d8, &ta.kernel(), &tb.kernel());
        assert_eq!(comm.members(), Subgroup::generated(&d8, &[c]).members());
    }

    #[test]
    fn pre_cat1_identities_are_checked() {
        let (d8, _, _, ta, tb) = d8_maps();
        let id = Homomorphism::identity(&d8);
        let pre = pre_cat1_by_endomorphisms(&id, &id).unwrap();
        assert_eq!(pre.range().order(), 8);
        assert!(pre.is_cat1());
        assert!(matches!(pre_cat1_by_endomorphisms(&ta, &tb), Err(Error::Identity { .. })));
    }

    #[test]
    fn kernel_commutator_failures() {
        for (o, i) in [(8, 4), (12, 3)] {
            let g = small_group(o, i).unwrap();
            let zero = Homomorphism::zero(&g, &g);
            let pre = pre_cat1_by_endomorphisms(&zero, &zero).unwrap();
            assert!(is_cat1_group(&pre).is_some());
        }
        let a4 = cat1_isomorphism_classes(&small_group(12, 3).unwrap());
        assert_eq!((a4.enumeration.len(), a4.families.len()), (5, 2));
        assert_eq!(all_cat1_groups(&Arc::new(GroupTable::trivial())).len(), 1);
        assert_eq!(all_cat1_groups(&small_group(8, 3).unwrap()).len(), 9);
    }

    #[test]
    fn small_classifications() {
        for ((o, i), (n, k)) in [((8, 2), (18, 6)), ((4, 2), (14, 4)), ((9, 1), (2, 2)), ((8, 1), (2, 2))] {
            let c = cat1_isomorphism_classes(&small_group(o, i).unwrap());
            assert_eq!((c.enumeration.len(), c.families.len()), (n, k), "{o}/{i}");
        }
    }

    #[test]
    fn general_form_round_trip() {
        let a4 = small_group(12, 3).unwrap();
        for c in all_cat1_groups(&a4) {
            let gf = c.general_form();
            let back = from_general_form(&gf.embedding, &gf.tail, &gf.head).unwrap();
            assert_eq!(back.tail().map(), c.tail().map());
            assert_eq!(back.head().map(), c.head().map());
        }
        let id = Homomorphism::identity(&a4);
        let c = from_general_form(&id, &id, &id).unwrap();
        assert_eq!(c.range().order(), 12);
    }

    #[test]
    fn loday_round_trip_on_conjugation_xmod() {
        let d8 = small_group(8, 3).unwrap();
        let x = conjugation_xmod(&crate::group::center_subgroup(&d8)).unwrap();
        let c = cat1_of_xmod(&x).unwrap();
        assert_eq!(c.group().order(), 16);
        let y = xmod_of_cat1(&c).unwrap();
        assert!(is_crossed_module(&y).is_valid());
        assert_eq!(y.size(), x.size());
    }

    #[test]
    fn morphisms_of_d8_structure() {
        let (d8, _, _, ta, _) = d8_maps();
        let ca = Cat1Group::new(&ta, &ta).unwrap();
        let found = all_cat1_morphisms(&ca, &ca).unwrap();
        let brute = all_homomorphisms(&d8, &d8)
            .into_iter()
            .filter(|f| d8.elements().all(|x| f.apply(ta.apply(x)) == ta.apply(f.apply(x))))
            .count();
        assert_eq!(found.len(), brute);
        assert!(found.iter().any(|m| m.map.map() == Homomorphism::identity(&d8).map()));
        let one = Arc::new(GroupTable::trivial());
        let triv = Cat1Group::new(&Homomorphism::identity(&one), &Homomorphism::identity(&one)).unwrap();
        assert_eq!(all_cat1_morphisms(&triv, &triv).unwrap().len(), 1);
    }
}
