//! Selecting structures on a catalog group. Positions shown to the user are
//! 1-based.

use std::str::FromStr;
use std::sync::Arc;

use hdgroups::cat1::Cat1Group;
use hdgroups::cat2::{cat2_group, Cat2Group};
use hdgroups::xsq::crossed_square_of_cat2;
use hdgroups::{GroupTable, Homomorphism};

use crate::cache::{Cache, CacheError, CacheRecord};
use crate::format::{cat1_document, cat2_document, xsq_document, Document, Section};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Cat1,
    Cat2,
    Xsq,
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cat1" => Ok(Kind::Cat1),
            "cat2" => Ok(Kind::Cat2),
            "xsq" => Ok(Kind::Xsq),
            _ => Err(format!("unknown kind `{s}` (expected cat1, cat2 or xsq)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    /// Number of isomorphism classes.
    Count,
    /// Number of structures.
    Total,
    /// 1-based positions of the class representatives.
    Classes,
    /// The partition into classes, as 1-based positions.
    Families,
    /// One structure, by 1-based position.
    Index(usize),
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "count" => Ok(Selector::Count),
            "total" => Ok(Selector::Total),
            "classes" => Ok(Selector::Classes),
            "families" => Ok(Selector::Families),
            _ => match s.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(Selector::Index(k)),
                _ => Err(format!("`{s}` is not a selector (count, total, classes, families or a position ≥ 1)")),
            },
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InspectError {
    #[error("position {index} is out of range: there are {count} structures")]
    OutOfRange { index: usize, count: usize },
    #[error(transparent)]
    Group(#[from] hdgroups::Error),
}

fn endo(g: &Arc<GroupTable>, map: &[u32]) -> Result<Homomorphism, hdgroups::Error> {
    Homomorphism::new(g, g, map.to_vec())
}

fn cat1_at(g: &Arc<GroupTable>, r: &CacheRecord, k: usize) -> Result<Cat1Group, hdgroups::Error> {
    let (t, h) = r.cat1[k];
    Cat1Group::new(&endo(g, &r.idempotents[t as usize])?, &endo(g, &r.idempotents[h as usize])?)
}

fn cat2_at(g: &Arc<GroupTable>, r: &CacheRecord, k: usize) -> Result<Cat2Group, hdgroups::Error> {
    let (i, j) = r.cat2[k];
    cat2_group(&cat1_at(g, r, i as usize)?, &cat1_at(g, r, j as usize)?)
}

fn one_based(fams: &[Vec<usize>]) -> Vec<Vec<u32>> {
    fams.iter().map(|f| f.iter().map(|&x| x as u32 + 1).collect()).collect()
}

/// The listing for `kind` and `selector` on catalog group `order/id`:
/// a bare number for the counts, a document otherwise.
pub fn inspect(
    kind: Kind,
    order: usize,
    id: usize,
    selector: Selector,
    cache: Option<&Cache>,
    warn: &mut dyn FnMut(&CacheError),
) -> Result<String, InspectError> {
    let g = hdgroups::small_group(order, id)?;
    let record = match cache {
        Some(c) => c.load_or_compute(order, id, &g, warn),
        None => CacheRecord::compute(order, id, &g),
    };
    let (count, families) = match kind {
        Kind::Cat1 => (record.cat1.len(), &record.cat1_families),
        Kind::Cat2 | Kind::Xsq => (record.cat2.len(), &record.cat2_families),
    };
    let out = match selector {
        Selector::Count => format!("{}\n", families.len()),
        Selector::Total => format!("{count}\n"),
        Selector::Classes => {
            let mut doc = Document::new("classes");
            doc.push(Section::new("representatives").with_rows([families.iter().map(|f| f[0] as u32 + 1).collect()]));
            doc.emit()
        }
        Selector::Families => {
            let mut doc = Document::new("families");
            doc.push(Section::new("families").with_args([families.len() as u64]).with_rows(one_based(families)));
            doc.emit()
        }
        Selector::Index(index) => {
            if index > count {
                return Err(InspectError::OutOfRange { index, count });
            }
            let k = index - 1;
            match kind {
                Kind::Cat1 => cat1_document(&cat1_at(&g, &record, k)?).emit(),
                Kind::Cat2 => cat2_document(&cat2_at(&g, &record, k)?).emit(),
                Kind::Xsq => xsq_document(&crossed_square_of_cat2(&cat2_at(&g, &record, k)?)?).emit(),
            }
        }
    };
    Ok(out)
}
