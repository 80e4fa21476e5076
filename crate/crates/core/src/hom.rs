//! Homomorphisms as total element maps, and their enumeration.
//!
//! Enumeration backtracks over images of the source's stored generators.
//! After each generator is assigned, the partial map is extended across the
//! subgroup generated so far; a clash with the target's multiplication
//! prunes the branch.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, Subgroup};

const UNSET: Elem = Elem::MAX;

#[derive(Clone)]
pub struct Homomorphism {
    source: Arc<GroupTable>,
    target: Arc<GroupTable>,
    map: Vec<Elem>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homomorphism({} -> {}, {:?})", self.source.label(), self.target.label(), self.map)
    }
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.target.order() == other.target.order()
    }
}

impl Eq for Homomorphism {}

impl Homomorphism {
    /// Checks `f(x·g) = f(x)·f(g)` for every `x` and every generator `g`,
    /// which suffices because the generators span the source.
    pub fn new(source: &Arc<GroupTable>, target: &Arc<GroupTable>, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::GroupMismatch);
        }
        let f = Homomorphism { source: source.clone(), target: target.clone(), map };
        if let Some((x, y)) = f.homomorphism_witness() {
            return Err(Error::NotHomomorphism { x, y });
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Arc<GroupTable>, target: Arc<GroupTable>, map: Vec<Elem>) -> Self {
        debug_assert_eq!(map.len(), source.order());
        Homomorphism { source, target, map }
    }

    /// The unique homomorphism with the given images of the source's
    /// generators, if the images respect every relation.
    pub fn from_generator_images(source: &Arc<GroupTable>, target: &Arc<GroupTable>, images: &[Elem]) -> Result<Self> {
        let gens = source.generators();
        if images.len() != gens.len() || images.iter().any(|&y| y as usize >= target.order()) {
            return Err(Error::GroupMismatch);
        }
        let map = extend(source, target, gens, images).ok_or(Error::InconsistentImages)?;
        Ok(Homomorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn identity(g: &Arc<GroupTable>) -> Self {
        Homomorphism { source: g.clone(), target: g.clone(), map: g.elements().collect() }
    }

    pub fn zero(source: &Arc<GroupTable>, target: &Arc<GroupTable>) -> Self {
        Homomorphism { source: source.clone(), target: target.clone(), map: vec![0; source.order()] }
    }

    pub fn source(&self) -> &Arc<GroupTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    pub fn generator_images(&self) -> Vec<Elem> {
        self.source.generators().iter().map(|&g| self.apply(g)).collect()
    }

    fn homomorphism_witness(&self) -> Option<(Elem, Elem)> {
        if self.map[0] != 0 {
            return Some((0, 0));
        }
        let (s, t) = (&self.source, &self.target);
        for &g in s.generators() {
            for x in s.elements() {
                if self.apply(s.mul(x, g)) != t.mul(self.apply(x), self.apply(g)) {
                    return Some((x, g));
                }
            }
        }
        None
    }

    /// Checks the homomorphism property on every pair of elements.
    pub fn is_homomorphism_exhaustive(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        s.elements().all(|x| s.elements().all(|y| self.apply(s.mul(x, y)) == t.mul(self.apply(x), self.apply(y))))
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.target.order() != self.source.order() {
            return Err(Error::GroupMismatch);
        }
        Ok(Homomorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map: inner.map.iter().map(|&y| self.map[y as usize]).collect(),
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<Elem> = self.source.elements().filter(|&x| self.map[x as usize] == 0).collect();
        Subgroup::from_members(&self.source, &members).expect("kernel is a subgroup")
    }

    pub fn image(&self) -> Subgroup {
        let mut mask = vec![false; self.target.order()];
        for &y in &self.map {
            mask[y as usize] = true;
        }
        let members: Vec<Elem> = (0..mask.len() as Elem).filter(|&y| mask[y as usize]).collect();
        Subgroup::from_members(&self.target, &members).expect("image is a subgroup")
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().filter(|&&y| y == 0).count() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    pub fn is_endomorphism(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) || self.source.order() == self.target.order()
    }

    pub fn is_idempotent(&self) -> bool {
        self.map.iter().all(|&y| self.map[y as usize] == y)
    }

    pub fn inverse(&self) -> Result<Homomorphism> {
        if !self.is_bijective() {
            return Err(Error::NotInjective);
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y as usize] = x as Elem;
        }
        Ok(Homomorphism { source: self.target.clone(), target: self.source.clone(), map: inv })
    }

    /// Restriction to `from ≤ source`, corestricted to `to ≤ target`, as a
    /// map between the embedded groups.
    pub fn restrict(&self, from: &Subgroup, to: &Subgroup) -> Result<Homomorphism> {
        let map = from
            .members()
            .iter()
            .map(|&x| to.local_index(self.apply(x)))
            .collect::<Option<Vec<Elem>>>()
            .ok_or(Error::GroupMismatch)?;
        Ok(Homomorphism::new_unchecked(from.group().clone(), to.group().clone(), map))
    }

    /// Same map with a different (equal-order) copy of the source/target.
    pub fn rebased(&self, source: &Arc<GroupTable>, target: &Arc<GroupTable>) -> Homomorphism {
        Homomorphism::new_unchecked(source.clone(), target.clone(), self.map.clone())
    }
}

/// Extends generator images across `⟨gens⟩`; `None` on a relation clash.
/// Elements outside the generated subgroup stay [`UNSET`].
fn extend(g: &GroupTable, h: &GroupTable, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut map = vec![UNSET; g.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize];
        for (&gk, &ik) in gens.iter().zip(images) {
            let y = g.mul(x, gk) as usize;
            let img = h.mul(fx, ik);
            if map[y] == UNSET {
                map[y] = img;
                queue.push_back(y as Elem);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    All,
    Bijective,
}

/// Backtracking search; `visit` returns `false` to stop early.
fn search(g: &GroupTable, h: &GroupTable, mode: Mode, visit: &mut dyn FnMut(Vec<Elem>) -> bool) {
    if mode == Mode::Bijective && g.order() != h.order() {
        return;
    }
    let gens = g.generators();
    let g_orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let h_orders = h.element_orders();
    let candidates: Vec<Vec<Elem>> = g_orders
        .iter()
        .map(|&o| {
            h.elements()
                .filter(|&y| match mode {
                    Mode::All => o % h_orders[y as usize] == 0,
                    Mode::Bijective => o == h_orders[y as usize],
                })
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    recurse(g, h, mode, gens, &candidates, &mut images, visit);
}

fn recurse(
    g: &GroupTable,
    h: &GroupTable,
    mode: Mode,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    visit: &mut dyn FnMut(Vec<Elem>) -> bool,
) -> bool {
    let k = images.len();
    if k == gens.len() {
        let map = extend(g, h, gens, images).expect("checked at previous level");
        if mode == Mode::Bijective && map.iter().filter(|&&y| y == 0).count() != 1 {
            return true;
        }
        return visit(map);
    }
    for &c in &candidates[k] {
        images.push(c);
        let ok = extend(g, h, &gens[..=k], images).is_some();
        let keep_going = !ok || recurse(g, h, mode, gens, candidates, images, visit);
        images.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

fn collect_sorted(g: &Arc<GroupTable>, h: &Arc<GroupTable>, mode: Mode) -> Vec<Homomorphism> {
    let mut maps = Vec::new();
    search(g, h, mode, &mut |m| {
        maps.push(m);
        true
    });
    maps.sort_unstable();
    maps.into_iter().map(|m| Homomorphism::new_unchecked(g.clone(), h.clone(), m)).collect()
}

/// Every homomorphism `G → H`, lexicographically ordered by map array.
pub fn all_homomorphisms(g: &Arc<GroupTable>, h: &Arc<GroupTable>) -> Vec<Homomorphism> {
    collect_sorted(g, h, Mode::All)
}

/// Endomorphisms with `f∘f = f`, in canonical order.
pub fn idempotent_endomorphisms(g: &Arc<GroupTable>) -> Vec<Homomorphism> {
    all_homomorphisms(g, g).into_iter().filter(Homomorphism::is_idempotent).collect()
}

/// `Aut(G)` in canonical order (the identity first), with the inner
/// automorphisms flagged.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub maps: Vec<Homomorphism>,
    pub inner: Vec<bool>,
}

impl Automorphisms {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn inner_automorphisms(&self) -> impl Iterator<Item = &Homomorphism> {
        self.maps.iter().zip(&self.inner).filter(|(_, &i)| i).map(|(m, _)| m)
    }

    pub fn position(&self, map: &[Elem]) -> Option<usize> {
        self.maps.binary_search_by(|m| m.map().cmp(map)).ok()
    }

    /// `Aut(G)` as a group with `α·β = α∘β`, and its natural action on `G`.
    pub fn as_group(&self) -> Result<(Arc<GroupTable>, GroupAction)> {
        let n = self.maps.len();
        if n > crate::group::DENSE_CAP {
            return Err(Error::TooLarge { order: n, cap: crate::group::DENSE_CAP });
        }
        let g = self.maps[0].source().clone();
        let mut table = Vec::with_capacity(n * n);
        for a in &self.maps {
            for b in &self.maps {
                let ab = a.compose(b)?;
                table.push(self.position(ab.map()).expect("Aut closed under composition") as Elem);
            }
        }
        let all: Vec<Elem> = (0..n as Elem).collect();
        let tmp = GroupTable::from_table(table.clone(), all.clone(), "Aut")?;
        let gens = crate::group::greedy_generators(&tmp, &all);
        let aut = Arc::new(GroupTable::from_table(table, gens, format!("Aut({})", g.label()))?);
        let act_table = self.maps.iter().flat_map(|m| m.map().iter().copied()).collect();
        let action = GroupAction::new(&aut, &g, act_table)?;
        Ok((aut, action))
    }
}

pub fn automorphism_group(g: &Arc<GroupTable>) -> Automorphisms {
    let maps = collect_sorted(g, g, Mode::Bijective);
    let mut inner = vec![false; maps.len()];
    for x in g.elements() {
        let conj: Vec<Elem> = g.elements().map(|y| g.conj(x, y)).collect();
        if let Ok(i) = maps.binary_search_by(|m| m.map().cmp(&conj[..])) {
            inner[i] = true;
        }
    }
    Automorphisms { maps, inner }
}

/// A bijective homomorphism `G → H`, or `None` when the groups are not
/// isomorphic. Deterministic: the first hit in generator-image order.
pub fn isomorphism_between(g: &Arc<GroupTable>, h: &Arc<GroupTable>) -> Option<Homomorphism> {
    if g.order() != h.order() || g.fingerprint() != h.fingerprint() {
        return None;
    }
    let mut found = None;
    search(g, h, Mode::Bijective, &mut |m| {
        found = Some(m);
        false
    });
    found.map(|m| Homomorphism::new_unchecked(g.clone(), h.clone(), m))
}
