//! The 92 groups of order at most 30.

use std::sync::{Arc, OnceLock};

use crate::catalog_data::{RawEntry, ENTRIES};
use crate::error::{Error, Result};
use crate::group::{group_from_permutation_generators, GroupTable};
use crate::hom::isomorphism_between;
use crate::perm::Perm;

pub const MAX_ORDER: usize = 30;

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub order: usize,
    pub id: usize,
    pub name: &'static str,
    /// Structure description in the style of the classification tables.
    pub structure_tag: &'static str,
    pub generators: &'static [&'static str],
}

impl CatalogEntry {
    fn from_raw(raw: &RawEntry) -> Self {
        CatalogEntry {
            order: raw.order,
            id: raw.id,
            name: raw.name,
            structure_tag: raw.structure,
            generators: raw.generators,
        }
    }

    pub fn key(&self) -> (usize, usize) {
        (self.order, self.id)
    }

    pub fn permutations(&self) -> Vec<Perm> {
        self.generators.iter().map(|g| g.parse().expect("catalog permutations are well formed")).collect()
    }

    pub fn group(&self) -> Arc<GroupTable> {
        small_group(self.order, self.id).expect("catalog entry")
    }
}

pub fn entries() -> impl Iterator<Item = CatalogEntry> {
    ENTRIES.iter().map(CatalogEntry::from_raw)
}

fn built() -> &'static [OnceLock<Arc<GroupTable>>] {
    static BUILT: OnceLock<Vec<OnceLock<Arc<GroupTable>>>> = OnceLock::new();
    BUILT.get_or_init(|| ENTRIES.iter().map(|_| OnceLock::new()).collect())
}

/// The catalog group with the given key, built once and shared.
pub fn small_group(order: usize, id: usize) -> Result<Arc<GroupTable>> {
    let pos = ENTRIES.iter().position(|e| e.order == order && e.id == id).ok_or_else(|| Error::UnknownGroup {
        order,
        id,
        valid: ENTRIES.iter().filter(|e| e.order == order).map(|e| e.id).collect(),
    })?;
    let slot = &built()[pos];
    Ok(slot
        .get_or_init(|| {
            let entry = CatalogEntry::from_raw(&ENTRIES[pos]);
            let group = group_from_permutation_generators(&entry.permutations(), entry.name)
                .expect("catalog generators build a small group");
            assert_eq!(group.order(), order, "catalog entry {order}/{id} has the wrong order");
            Arc::new(group)
        })
        .clone())
}

pub fn groups_of_order(order: usize) -> Result<Vec<CatalogEntry>> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::OutsideCatalog(order));
    }
    Ok(entries().filter(|e| e.order == order).collect())
}

pub fn entry(order: usize, id: usize) -> Option<CatalogEntry> {
    entries().find(|e| e.order == order && e.id == id)
}

/// Catalog key of the entry isomorphic to `g`.
pub fn identify_group(g: &Arc<GroupTable>) -> Result<(usize, usize)> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::OutsideCatalog(n));
    }
    let g = g.dense()?;
    let fp = g.fingerprint();
    let candidates: Vec<CatalogEntry> =
        groups_of_order(n)?.into_iter().filter(|e| e.group().fingerprint() == fp).collect();
    if let [only] = candidates.as_slice() {
        return Ok(only.key());
    }
    candidates
        .iter()
        .find(|e| isomorphism_between(&g, &e.group()).is_some())
        .map(|e| e.key())
        .ok_or(Error::OutsideCatalog(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_92_groups() {
        assert_eq!(entries().count(), 92);
        let per_order: Vec<usize> = (1..=30).map(|n| groups_of_order(n).unwrap().len()).collect();
        assert_eq!(per_order[15], 14);
        assert_eq!(per_order[0], 1);
        assert!(groups_of_order(31).is_err());
        assert!(groups_of_order(0).is_err());
    }

    #[test]
    fn order_twelve_names() {
        let names: Vec<&str> = groups_of_order(12).unwrap().iter().map(|e| e.name).collect();
        assert_eq!(names, ["C3 : C4", "C12", "A4", "D12", "C6 x C2"]);
    }

    #[test]
    fn unknown_key_lists_valid_ids() {
        match small_group(8, 9) {
            Err(Error::UnknownGroup { valid, .. }) => assert_eq!(valid, vec![1, 2, 3, 4, 5]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn small_keys() {
        assert_eq!(small_group(1, 1).unwrap().order(), 1);
        assert_eq!(small_group(12, 3).unwrap().label(), "A4");
        assert_eq!(identify_group(&small_group(1, 1).unwrap()).unwrap(), (1, 1));
    }
}
