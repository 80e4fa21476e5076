//! Acceptance suite: one `criterion N: PASS|FAIL` line per criterion, then a
//! non-zero exit if any failed. All tolerances are exact.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use hdgroups::cat1::{
    all_cat1_groups, cat1_isomorphism_classes, cat1_of_xmod, enumerate_cat1, xmod_of_cat1, Cat1Group,
};
use hdgroups::cat2::{
    all_cat2_group_morphisms, cat2_group, classify, diagonal_pre_cat1, enumerate_cat2, Classification,
};
use hdgroups::catalog::{entries, CatalogEntry};
use hdgroups::group::group_from_permutation_generators;
use hdgroups::xmod::{automorphism_xmod, conjugation_xmod, is_crossed_module, CrossedModule};
use hdgroups::xsq::{
    cat2_of_crossed_square, crossed_square_by_normal_subgroups, crossed_square_of_cat2, is_crossed_square,
};
use hdgroups::{
    all_homomorphisms, idempotent_endomorphisms, identify_group, small_group, Elem, GroupTable, Homomorphism, Perm,
    Subgroup,
};
use hdgroups_cli::table::{published, Counts, PUBLISHED_TOTAL_BAD, PUBLISHED_TOTAL_CLASSES};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

struct Row {
    entry: CatalogEntry,
    cyclic: bool,
    classification: Classification,
}

impl Row {
    fn counts(&self) -> Counts {
        let c = &self.classification;
        Counts {
            ie: c.cat1().idempotents().len(),
            cat1: c.cat1().len(),
            cat1_classes: c.cat1_families.len(),
            cat2: c.cat2.len(),
            cat2_classes: c.cat2_families.len(),
            bad_diagonals: c.bad_diagonal_classes(),
        }
    }

    fn key(&self) -> (usize, usize) {
        self.entry.key()
    }
}

fn five(c: &Counts) -> [usize; 5] {
    [c.ie, c.cat1, c.cat1_classes, c.cat2, c.cat2_classes]
}

fn is_cyclic(g: &GroupTable) -> bool {
    g.elements().any(|x| g.element_order(x) == g.order())
}

fn cyclic_group(n: usize) -> Arc<GroupTable> {
    let cycle: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    let p: Perm = format!("({})", cycle.join(",")).parse().unwrap();
    Arc::new(group_from_permutation_generators(&[p], &format!("C{n}")).unwrap())
}

fn by_images(g: &Arc<GroupTable>, gens: &[Elem], images: &[Elem]) -> Homomorphism {
    let mut map = vec![Elem::MAX; g.order()];
    map[0] = 0;
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for (&s, &img) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            if map[y as usize] == Elem::MAX {
                map[y as usize] = g.mul(map[x as usize], img);
                frontier.push(y);
            }
        }
    }
    Homomorphism::new(g, g, map).unwrap()
}

fn normal_subgroups(g: &Arc<GroupTable>) -> Vec<Subgroup> {
    oracle::subgroups(g)
        .into_iter()
        .filter(|s| oracle::is_normal(g, s))
        .map(|s| Subgroup::from_members(g, &s).unwrap())
        .collect()
}

fn mismatches(rows: &[&Row], columns: &[usize]) -> Vec<String> {
    const NAMES: [&str; 6] = ["ie", "cat1", "cat1_classes", "cat2", "cat2_classes", "bad_diagonals"];
    let mut out = Vec::new();
    for row in rows {
        let (o, i) = row.key();
        let Some(p) = published(o, i) else {
            out.push(format!("{o}/{i} has no published row"));
            continue;
        };
        let c = row.counts();
        let (cf, pf) =
            ([five(&c).as_slice(), &[c.bad_diagonals]].concat(), [five(&p).as_slice(), &[p.bad_diagonals]].concat());
        for &k in columns {
            if cf[k] != pf[k] {
                out.push(format!("{o}/{i} {} {} vs {}", NAMES[k], cf[k], pf[k]));
            }
        }
    }
    out
}

fn criterion_1(rows: &[Row]) -> Outcome {
    let fast: Vec<&Row> = rows.iter().filter(|r| (r.key() != (16, 14) && r.entry.order <= 16) || r.cyclic).collect();
    let bad = mismatches(&fast, &[0, 1, 2, 3, 4]);
    Outcome::new(bad.is_empty(), format!("{} rows compared, {} mismatched cells {:?}", fast.len(), bad.len(), bad))
}

fn criterion_2(rows: &[Row]) -> Outcome {
    let all: Vec<&Row> = rows.iter().collect();
    let bad = mismatches(&all, &[0, 1, 2, 3, 4]);
    let total: usize = rows.iter().map(|r| r.classification.cat2_families.len()).sum();
    let burnside: Vec<String> = [(16, 14), (27, 5)]
        .iter()
        .map(|&(o, i)| format!("{o}/{i} Burnside {}", oracle::burnside_cat2_classes(&small_group(o, i).unwrap()).0))
        .collect();
    Outcome::new(
        rows.len() == 92 && bad.is_empty() && total == PUBLISHED_TOTAL_CLASSES,
        format!(
            "{} rows, class total {total} vs {PUBLISHED_TOTAL_CLASSES}, mismatched cells {:?}, {}",
            rows.len(),
            bad,
            burnside.join(", ")
        ),
    )
}

fn criterion_3(rows: &[Row]) -> Outcome {
    const F: [usize; 5] = [1, 3, 10, 36, 136];
    let mut groups: Vec<(String, Arc<GroupTable>)> = rows
        .iter()
        .filter(|r| r.cyclic)
        .map(|r| (format!("{}/{}", r.entry.order, r.entry.id), r.entry.group()))
        .collect();
    groups.extend([210, 420].map(|n| (format!("C{n}"), cyclic_group(n))));
    let mut failures = Vec::new();
    let mut seen_m = [false; 5];
    for (name, g) in &groups {
        let n = g.order();
        let m = (2..=n).filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0)).count();
        seen_m[m] = true;
        let c = classify(g);
        let got =
            [c.cat1().idempotents().len(), c.cat1().len(), c.cat1_families.len(), c.cat2.len(), c.cat2_families.len()];
        let want = [1 << m, 1 << m, 1 << m, F[m], F[m]];
        let singletons = c.cat1_families.sizes().iter().chain(&c.cat2_families.sizes()).all(|&s| s == 1);
        if got != want || !singletons {
            failures.push(format!("{name}: {got:?} vs {want:?}, singletons {singletons}"));
        }
    }
    let covered = seen_m[1..].iter().all(|&s| s);
    Outcome::new(
        failures.is_empty() && covered,
        format!("{} cyclic groups, m = 1..4 covered: {covered}, failures {failures:?}", groups.len()),
    )
}

fn criterion_4(rows: &[Row]) -> Outcome {
    let census: BTreeMap<(usize, usize), usize> =
        rows.iter().map(|r| (r.key(), r.classification.bad_diagonal_classes())).filter(|&(_, n)| n > 0).collect();
    let total: usize = census.values().sum();
    let all: Vec<&Row> = rows.iter().collect();
    let bad = mismatches(&all, &[5]);
    let burnside: Vec<String> = census
        .keys()
        .map(|&(o, i)| format!("{o}/{i}:{}", oracle::burnside_cat2_classes(&small_group(o, i).unwrap()).1))
        .collect();
    let cells: Vec<String> = census.iter().map(|((o, i), n)| format!("{o}/{i}:{n}")).collect();
    Outcome::new(
        total == PUBLISHED_TOTAL_BAD && bad.is_empty(),
        format!(
            "{total} classes vs {PUBLISHED_TOTAL_BAD} [{}], Burnside [{}], mismatches {bad:?}",
            cells.join(" "),
            burnside.join(" ")
        ),
    )
}

/// The C4×C2 ⋊ C2 example on eight points, with `t_a` keeping only
/// `(2,6)(4,8)` and `t_b` keeping only `(1,2,3,4)(5,6,7,8)`.
fn session_cat2() -> hdgroups::cat2::Cat2Group {
    let gens: Vec<Perm> =
        ["(1,2,3,4)(5,6,7,8)", "(1,5)(2,6)(3,7)(4,8)", "(2,6)(4,8)"].iter().map(|p| p.parse().unwrap()).collect();
    let g = Arc::new(group_from_permutation_generators(&gens, "c4c2:c2").unwrap());
    let gs: Vec<Elem> = gens.iter().map(|p| g.find_perm(p).unwrap()).collect();
    let ta = by_images(&g, &gs, &[0, 0, gs[2]]);
    let tb = by_images(&g, &gs, &[gs[0], 0, 0]);
    cat2_group(&Cat1Group::new(&ta, &ta).unwrap(), &Cat1Group::new(&tb, &tb).unwrap()).unwrap()
}

/// The morphism session pairs the zero structure on C4×C2 with a `t = h`
/// structure whose kernel is cyclic of order 4, and on D8 a structure with
/// range of order 2 and kernel the rotation subgroup with the identity.
fn morphism_session_counts() -> Vec<usize> {
    let cyclic4 = |s: &Subgroup| s.order() == 4 && s.members().iter().any(|&x| s.parent().element_order(x) == 4);
    let g1 = small_group(8, 2).unwrap();
    let g2 = small_group(8, 3).unwrap();
    let zero = Homomorphism::new(&g1, &g1, vec![0; 8]).unwrap();
    let up1 = Cat1Group::new(&zero, &zero).unwrap();
    let id = Homomorphism::identity(&g2);
    let lt2 = Cat1Group::new(&id, &id).unwrap();
    let lows: Vec<Cat1Group> = all_cat1_groups(&g1)
        .into_iter()
        .filter(|c| c.range().order() == 2 && c.tail().map() == c.head().map() && cyclic4(&c.tail().kernel()))
        .collect();
    let ups: Vec<Cat1Group> = all_cat1_groups(&g2)
        .into_iter()
        .filter(|c| c.range().order() == 2 && cyclic4(&c.tail().kernel()) && cyclic4(&c.head().kernel()))
        .collect();
    let mut counts = Vec::new();
    for lt1 in &lows {
        for up2 in &ups {
            let a = cat2_group(&up1, lt1).unwrap();
            let b = cat2_group(up2, &lt2).unwrap();
            counts.push(all_cat2_group_morphisms(&a, &b).unwrap().len());
        }
    }
    counts
}

fn criterion_5(rows: &[Row]) -> Outcome {
    let a4 = small_group(12, 3).unwrap();
    let a4_classes = cat1_isomorphism_classes(&a4);
    let a4_total = all_cat1_groups(&a4).len();
    let a4_count = a4_classes.families.len();

    let c2ab = session_cat2();
    let size = c2ab.size();
    let bad_diagonal = diagonal_pre_cat1(&c2ab).1.is_some();

    let xab = crossed_square_of_cat2(&c2ab).unwrap();
    let ids: Vec<(usize, usize)> =
        [xab.l(), xab.m(), xab.n(), xab.p()].iter().map(|g| identify_group(g).unwrap()).collect();

    let morphisms = morphism_session_counts();

    let c4c2 = rows.iter().find(|r| r.key() == (8, 2)).unwrap();
    let mut sizes = c4c2.classification.cat2_families.sizes();
    sizes.sort();
    let mut want_sizes = vec![1, 1, 1];
    want_sizes.extend([4; 11]);

    let pass = a4_count == 2
        && size == [16, 2, 4, 1]
        && bad_diagonal
        && ids == [(2, 1), (2, 1), (4, 1), (1, 1)]
        && !morphisms.is_empty()
        && morphisms.iter().all(|&n| n == 2)
        && sizes == want_sizes;
    Outcome::new(
        pass,
        format!(
            "A4 classes {a4_count} ({a4_total} structures); C2ab size {size:?}, non-cat1 diagonal {bad_diagonal}; \
             Xab ids {ids:?}; morphism counts {morphisms:?}; C4xC2 family sizes {sizes:?}"
        ),
    )
}

fn xmod_types(x: &CrossedModule) -> ((usize, usize), (usize, usize)) {
    (identify_group(x.source()).unwrap(), identify_group(x.range()).unwrap())
}

fn criterion_6(rows: &[Row]) -> Outcome {
    let mut failures = Vec::new();

    // Crossed modules from every cat¹ structure, every normal inclusion and
    // every automorphism crossed module in the catalog, restricted to
    // |S⋊R| ≤ 200.
    let mut xmods: Vec<CrossedModule> = Vec::new();
    for row in rows {
        let g = row.entry.group();
        xmods.extend(row.classification.cat1().structures().iter().map(|c| xmod_of_cat1(c).unwrap()));
        if g.order() <= 14 {
            xmods.extend(
                normal_subgroups(&g)
                    .iter()
                    .filter(|n| n.order() * g.order() <= 200)
                    .map(|n| conjugation_xmod(n).unwrap()),
            );
        }
        if let Ok(x) = automorphism_xmod(&g) {
            if x.source().order() * x.range().order() <= 200 {
                xmods.push(x);
            }
        }
    }
    for x in &xmods {
        let c = cat1_of_xmod(x).unwrap();
        let back = xmod_of_cat1(&c).unwrap();
        if !is_crossed_module(&back).is_valid() || xmod_types(&back) != xmod_types(x) {
            failures.push(format!("xmod {:?} -> {:?}", xmod_types(x), xmod_types(&back)));
        }
    }

    let mut converted = 0usize;
    for row in rows.iter().filter(|r| r.entry.order <= 16) {
        let e = &row.classification.cat2;
        for k in 0..e.len() {
            let c = e.structure(k);
            let x = crossed_square_of_cat2(&c).unwrap();
            let report = is_crossed_square(&x);
            if !report.is_valid() {
                failures.push(format!("{}/{} #{k}: {}", row.entry.order, row.entry.id, report));
            }
            if row.entry.order <= 12 {
                let again = crossed_square_of_cat2(&cat2_of_crossed_square(&x).unwrap()).unwrap();
                let corners = |s: &hdgroups::xsq::CrossedSquare| {
                    [s.l(), s.m(), s.n(), s.p()].map(|g| identify_group(&g.dense().unwrap()).unwrap())
                };
                if corners(&again) != corners(&x) {
                    failures.push(format!("{}/{} #{k}: corners changed", row.entry.order, row.entry.id));
                }
            }
            converted += 1;
        }
    }

    let d20 = crossed_square_by_normal_subgroups_d20();
    let c2g1 = cat2_of_crossed_square(&d20).unwrap();
    let order = c2g1.group().order();
    let first = hdgroups::cat1::cat1_report(c2g1.first().tail(), c2g1.first().head());
    let second = hdgroups::cat1::cat1_report(c2g1.second().tail(), c2g1.second().head());
    let commuting = hdgroups::cat2::commutation_report(
        (c2g1.first().tail(), c2g1.first().head()),
        (c2g1.second().tail(), c2g1.second().head()),
    );
    let xs1_ok = order == 10_000 && first.is_valid() && second.is_valid() && commuting.is_valid();

    Outcome::new(
        failures.is_empty() && xs1_ok,
        format!(
            "{} crossed modules, {converted} cat2 conversions, XS1 cat2 order {order} valid {xs1_ok}, failures {:?}",
            xmods.len(),
            &failures[..failures.len().min(5)]
        ),
    )
}

/// `C5 ⊴ D10a, D10b ⊴ D20`, the two dihedral subgroups of index 2 meeting
/// in the rotations of order 5.
fn crossed_square_by_normal_subgroups_d20() -> hdgroups::xsq::CrossedSquare {
    let p1: Perm = "(1,2,3,4,5,6,7,8,9,10)".parse().unwrap();
    let p2: Perm = "(2,10)(3,9)(4,8)(5,7)".parse().unwrap();
    let d20 = Arc::new(group_from_permutation_generators(&[p1.clone(), p2.clone()], "d20").unwrap());
    let e1 = d20.find_perm(&p1).unwrap();
    let e2 = d20.find_perm(&p2).unwrap();
    let r2 = d20.mul(e1, e1);
    let sub = |seed: &[Elem]| hdgroups::group::subgroup_generated(&d20, seed);
    let (c5, d10a, d10b) = (sub(&[r2]), sub(&[r2, e2]), sub(&[r2, d20.mul(e1, e2)]));
    let x = crossed_square_by_normal_subgroups(&c5, &d10a, &d10b).unwrap();
    assert!(is_crossed_square(&x).is_valid());
    x
}

fn criterion_7(rows: &[Row]) -> Outcome {
    let mut failures = Vec::new();
    let small: Vec<Arc<GroupTable>> = rows.iter().filter(|r| r.entry.order <= 8).map(|r| r.entry.group()).collect();
    let mut pairs = 0;
    for g in &small {
        for h in &small {
            let ours: Vec<Vec<Elem>> = {
                let mut v: Vec<Vec<Elem>> = all_homomorphisms(g, h).iter().map(|f| f.map().to_vec()).collect();
                v.sort();
                v
            };
            if ours != oracle::homomorphisms(g, h) {
                failures.push(format!("homs {} -> {}", g.label(), h.label()));
            }
            pairs += 1;
        }
    }
    let mut groups = 0;
    for row in rows.iter().filter(|r| r.entry.order <= 16) {
        let g = row.entry.group();
        let naive = oracle::cat1_pairs(&g);
        let mut ours: Vec<(Vec<Elem>, Vec<Elem>)> = enumerate_cat1(&g)
            .structures()
            .iter()
            .map(|c| (c.tail().map().to_vec(), c.head().map().to_vec()))
            .collect();
        let mut sorted = naive.clone();
        ours.sort();
        sorted.sort();
        let idem_naive = oracle::homomorphisms(&g, &g).into_iter().filter(|f| oracle::compose(f, f) == *f).count();
        if ours != sorted || idem_naive != idempotent_endomorphisms(&g).len() {
            failures.push(format!("cat1 on {}/{}", row.entry.order, row.entry.id));
        }
        if enumerate_cat2(&g).len() != oracle::cat2_count(&naive) {
            failures.push(format!("cat2 on {}/{}", row.entry.order, row.entry.id));
        }
        groups += 1;
    }
    Outcome::new(
        failures.is_empty(),
        format!("{pairs} homomorphism pairs, {groups} groups for cat1/cat2, failures {failures:?}"),
    )
}

fn main() {
    let start = Instant::now();
    let rows: Vec<Row> = entries()
        .map(|entry| {
            let g = entry.group();
            Row { cyclic: is_cyclic(&g), classification: classify(&g), entry }
        })
        .collect();
    eprintln!("classified {} groups in {:.1?}", rows.len(), start.elapsed());

    type Criterion = fn(&[Row]) -> Outcome;
    let criteria: [(usize, Criterion); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let t = Instant::now();
        let outcome = check(&rows);
        failed += !outcome.pass as usize;
        println!(
            "criterion {n}: {} ({:.1?}) {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            t.elapsed(),
            outcome.detail
        );
    }
    if failed > 0 {
        println!("{failed} of 7 criteria failed");
        std::process::exit(1);
    }
}
