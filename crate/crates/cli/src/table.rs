//! The classification table: one row of counts per catalog group, and the
//! published values it is checked against.

use std::io::Write;

use hdgroups::catalog::{entries, CatalogEntry, MAX_ORDER};

use crate::cache::{Cache, CacheError, CacheRecord};

pub const HEADER: [&str; 9] =
    ["order", "id", "name", "ie", "cat1", "cat1_classes", "cat2", "cat2_classes", "bad_diagonals"];

/// Rows whose computation is gated behind `--heavy`.
pub const HEAVY: &[(usize, usize)] = &[(16, 14)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub ie: usize,
    pub cat1: usize,
    pub cat1_classes: usize,
    pub cat2: usize,
    pub cat2_classes: usize,
    pub bad_diagonals: usize,
}

impl Counts {
    pub fn of(record: &CacheRecord) -> Self {
        Counts {
            ie: record.idempotents.len(),
            cat1: record.cat1.len(),
            cat1_classes: record.cat1_families.len(),
            cat2: record.cat2.len(),
            cat2_classes: record.cat2_families.len(),
            bad_diagonals: record.bad_families.len(),
        }
    }

    fn fields(&self) -> [usize; 6] {
        [self.ie, self.cat1, self.cat1_classes, self.cat2, self.cat2_classes, self.bad_diagonals]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub order: usize,
    pub id: usize,
    pub name: String,
    /// `None` for a heavy row that was not computed.
    pub counts: Option<Counts>,
}

/// `(order, id, |IE|, |C¹|, |C¹/≅|, |C²|, |C²/≅|)` for every non-cyclic
/// group of order at most 30, as published.
#[rustfmt::skip]
const PUBLISHED_NONCYCLIC: &[(usize, usize, usize, usize, usize, usize, usize)] = &[
    (1, 1, 1, 1, 1, 1, 1),
    (4, 2, 8, 14, 4, 36, 9),
    (6, 1, 5, 4, 2, 7, 3),
    (8, 2, 10, 18, 6, 47, 14),
    (8, 3, 10, 9, 3, 21, 6),
    (8, 4, 2, 1, 1, 1, 1),
    (8, 5, 58, 226, 6, 1711, 23),
    (9, 2, 14, 38, 4, 93, 9),
    (10, 1, 7, 6, 2, 11, 3),
    (12, 1, 5, 4, 2, 7, 3),
    (12, 3, 6, 5, 2, 9, 3),
    (12, 4, 21, 12, 4, 41, 10),
    (12, 5, 16, 28, 8, 136, 32),
    (14, 1, 9, 8, 2, 15, 3),
    (16, 2, 26, 98, 5, 231, 11),
    (16, 3, 18, 25, 4, 57, 7),
    (16, 4, 10, 17, 3, 25, 4),
    (16, 5, 10, 18, 6, 47, 14),
    (16, 6, 6, 5, 2, 9, 3),
    (16, 7, 18, 9, 2, 17, 3),
    (16, 8, 10, 5, 2, 9, 3),
    (16, 9, 2, 1, 1, 1, 1),
    (16, 10, 82, 322, 12, 2875, 53),
    (16, 11, 82, 97, 9, 649, 29),
    (16, 12, 18, 17, 3, 25, 4),
    (16, 13, 26, 13, 2, 37, 4),
    (16, 14, 382, 4162, 9, 298483, 53),
    (18, 1, 11, 10, 2, 19, 3),
    (18, 3, 12, 8, 4, 24, 10),
    (18, 4, 47, 118, 4, 541, 9),
    (18, 5, 28, 76, 8, 358, 32),
    (20, 1, 7, 6, 2, 11, 3),
    (20, 3, 7, 6, 2, 11, 3),
    (20, 4, 31, 18, 4, 65, 10),
    (20, 5, 16, 28, 8, 136, 32),
    (21, 1, 9, 8, 2, 15, 3),
    (22, 1, 13, 12, 2, 23, 3),
    (24, 1, 5, 4, 2, 7, 3),
    (24, 3, 6, 1, 1, 1, 1),
    (24, 4, 5, 4, 2, 7, 3),
    (24, 5, 27, 12, 4, 41, 10),
    (24, 6, 33, 20, 4, 75, 10),
    (24, 7, 25, 36, 6, 115, 14),
    (24, 8, 23, 12, 4, 41, 10),
    (24, 9, 20, 36, 12, 178, 52),
    (24, 10, 20, 18, 6, 75, 20),
    (24, 11, 4, 2, 2, 3, 3),
    (24, 12, 12, 5, 2, 9, 3),
    (24, 13, 15, 10, 4, 31, 10),
    (24, 14, 157, 116, 8, 999, 32),
    (24, 15, 116, 452, 12, 6786, 84),
    (25, 2, 32, 152, 4, 348, 9),
    (26, 1, 15, 14, 2, 27, 3),
    (27, 2, 20, 56, 6, 138, 14),
    (27, 3, 38, 37, 2, 127, 4),
    (27, 4, 11, 10, 2, 19, 3),
    (27, 5, 236, 2108, 6, 24222, 16),
    (28, 1, 9, 8, 2, 15, 3),
    (28, 3, 41, 24, 4, 89, 10),
    (28, 4, 16, 28, 8, 136, 32),
    (30, 1, 10, 8, 4, 24, 10),
    (30, 2, 14, 12, 4, 38, 10),
    (30, 3, 25, 24, 4, 92, 10),
];

/// Published census of classes whose diagonal is not a cat¹-group; every
/// other group has none.
const PUBLISHED_BAD_DIAGONALS: &[((usize, usize), usize)] =
    &[((8, 3), 1), ((16, 3), 1), ((16, 13), 1), ((27, 3), 1), ((24, 10), 3), ((16, 11), 6)];

/// Published grand totals over all 92 groups.
pub const PUBLISHED_TOTAL_CLASSES: usize = 1000;
pub const PUBLISHED_TOTAL_BAD: usize = 13;

/// Number of distinct prime divisors.
fn distinct_primes(mut n: usize) -> u32 {
    let mut m = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            m += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    m + (n > 1) as u32
}

/// The published counts for a catalog group. Cyclic groups are not listed
/// individually: for `m` distinct prime divisors there are `2^m`
/// idempotents, cat¹-groups and cat¹ classes, and 3, 10, 36 or 136 cat²
/// structures, all in singleton classes.
pub fn published(order: usize, id: usize) -> Option<Counts> {
    let bad = PUBLISHED_BAD_DIAGONALS.iter().find(|(k, _)| *k == (order, id)).map_or(0, |&(_, n)| n);
    if let Some(&(_, _, ie, cat1, cat1_classes, cat2, cat2_classes)) =
        PUBLISHED_NONCYCLIC.iter().find(|r| (r.0, r.1) == (order, id))
    {
        return Some(Counts { ie, cat1, cat1_classes, cat2, cat2_classes, bad_diagonals: bad });
    }
    let entry = hdgroups::catalog::entry(order, id)?;
    let g = entry.group();
    if !g.elements().any(|x| g.element_order(x) == order) {
        return None;
    }
    let m = distinct_primes(order);
    let cat2 = [1, 3, 10, 36, 136][m as usize];
    let ie = 1 << m;
    Some(Counts { ie, cat1: ie, cat1_classes: ie, cat2, cat2_classes: cat2, bad_diagonals: 0 })
}

pub fn is_heavy(order: usize, id: usize) -> bool {
    HEAVY.contains(&(order, id))
}

/// Computes (or reads from `cache`) the row for one catalog group.
pub fn compute_row(
    entry: &CatalogEntry,
    cache: Option<&Cache>,
    warn: &mut dyn FnMut(&CacheError),
) -> ClassificationRow {
    let g = entry.group();
    let record = match cache {
        Some(c) => c.load_or_compute(entry.order, entry.id, &g, warn),
        None => CacheRecord::compute(entry.order, entry.id, &g),
    };
    ClassificationRow {
        order: entry.order,
        id: entry.id,
        name: entry.name.to_string(),
        counts: Some(Counts::of(&record)),
    }
}

/// All rows up to `max_order`; heavy rows are left uncomputed unless
/// `heavy` is set.
pub fn compute_table(
    max_order: usize,
    heavy: bool,
    cache: Option<&Cache>,
    warn: &mut dyn FnMut(&CacheError),
) -> Vec<ClassificationRow> {
    entries()
        .filter(|e| e.order <= max_order.min(MAX_ORDER))
        .map(|e| {
            if is_heavy(e.order, e.id) && !heavy {
                ClassificationRow { order: e.order, id: e.id, name: e.name.to_string(), counts: None }
            } else {
                compute_row(&e, cache, warn)
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Tsv,
}

pub fn write_table(rows: &[ClassificationRow], format: TableFormat, out: impl Write) -> csv::Result<()> {
    let delimiter = match format {
        TableFormat::Csv => b',',
        TableFormat::Tsv => b'\t',
    };
    let mut w = csv::WriterBuilder::new().delimiter(delimiter).terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        let mut record = vec![row.order.to_string(), row.id.to_string(), row.name.clone()];
        match &row.counts {
            Some(c) => record.extend(c.fields().iter().map(|x| x.to_string())),
            None => record.extend(std::iter::repeat_n("skipped".to_string(), 6)),
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

/// One disagreement between a computed and a published cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub order: usize,
    pub id: usize,
    pub column: &'static str,
    pub computed: usize,
    pub published: usize,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}/{} {}: computed {}, published {}",
            self.order, self.id, self.column, self.computed, self.published
        )
    }
}

/// Cell-by-cell comparison of computed rows with the published values;
/// skipped rows are not compared.
pub fn check_rows(rows: &[ClassificationRow]) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for row in rows {
        let (Some(c), Some(p)) = (row.counts, published(row.order, row.id)) else { continue };
        for ((column, computed), published) in HEADER[3..].iter().zip(c.fields()).zip(p.fields()) {
            if computed != published {
                out.push(Mismatch { order: row.order, id: row.id, column, computed, published });
            }
        }
    }
    out
}
