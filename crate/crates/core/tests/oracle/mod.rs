//! Brute-force reference implementations shared by the integration tests.
//! Everything here checks identities on all elements rather than on
//! generators.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::Arc;

use hdgroups::{Elem, GroupTable};

/// Every homomorphism `G → H`: all tuples of generator images, extended by
/// breadth-first search and kept if the result respects every product.
pub fn homomorphisms(g: &GroupTable, h: &GroupTable) -> Vec<Vec<Elem>> {
    let gens = g.generators();
    let mut out = Vec::new();
    let mut images = vec![0 as Elem; gens.len()];
    loop {
        if let Some(map) = extend(g, h, gens, &images) {
            if g.elements()
                .all(|x| g.elements().all(|y| map[g.mul(x, y) as usize] == h.mul(map[x as usize], map[y as usize])))
            {
                out.push(map);
            }
        }
        let mut k = 0;
        while k < images.len() {
            images[k] += 1;
            if (images[k] as usize) < h.order() {
                break;
            }
            images[k] = 0;
            k += 1;
        }
        if k == images.len() {
            break;
        }
    }
    out.sort();
    out
}

fn extend(g: &GroupTable, h: &GroupTable, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut map = vec![Elem::MAX; g.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0 as Elem]);
    while let Some(x) = queue.pop_front() {
        for (&s, &img) in gens.iter().zip(images) {
            let y = g.mul(x, s) as usize;
            let v = h.mul(map[x as usize], img);
            if map[y] == Elem::MAX {
                map[y] = v;
                queue.push_back(y as Elem);
            } else if map[y] != v {
                return None;
            }
        }
    }
    map.iter().all(|&v| v != Elem::MAX).then_some(map)
}

pub fn compose(f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    g.iter().map(|&x| f[x as usize]).collect()
}

/// `a∘b = b∘a` as element maps.
pub fn maps_commute(a: &[Elem], b: &[Elem]) -> bool {
    a.iter().zip(b).all(|(&ax, &bx)| a[bx as usize] == b[ax as usize])
}

pub fn kernel(f: &[Elem]) -> Vec<Elem> {
    (0..f.len() as Elem).filter(|&x| f[x as usize] == 0).collect()
}

pub fn commute(g: &GroupTable, a: &[Elem], b: &[Elem]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// Ordered pairs `(t, h)` of idempotent endomorphisms with `th = h`,
/// `ht = t` and `[ker t, ker h] = 1`.
pub fn cat1_pairs(g: &Arc<GroupTable>) -> Vec<(Vec<Elem>, Vec<Elem>)> {
    let idem: Vec<Vec<Elem>> = homomorphisms(g, g).into_iter().filter(|f| compose(f, f) == *f).collect();
    let mut out = Vec::new();
    for t in &idem {
        for h in &idem {
            if compose(t, h) == *h && compose(h, t) == *t && commute(g, &kernel(t), &kernel(h)) {
                out.push((t.clone(), h.clone()));
            }
        }
    }
    out
}

/// Unordered pairs of cat¹ structures whose maps pairwise commute.
pub fn cat2_count(pairs: &[(Vec<Elem>, Vec<Elem>)]) -> usize {
    let mut n = 0;
    for i in 0..pairs.len() {
        for j in i..pairs.len() {
            let (t1, h1) = &pairs[i];
            let (t2, h2) = &pairs[j];
            let ok = [(t1, t2), (h1, h2), (t1, h2), (h1, t2)].iter().all(|(a, b)| maps_commute(a, b));
            n += ok as usize;
        }
    }
    n
}

/// All subgroups, as sorted member lists.
pub fn subgroups(g: &Arc<GroupTable>) -> Vec<Vec<Elem>> {
    let span = |seed: &[Elem]| -> Vec<Elem> {
        let mask = g.closure(seed);
        (0..g.order() as Elem).filter(|&x| mask[x as usize]).collect()
    };
    let mut all: Vec<Vec<Elem>> = g.elements().map(|x| span(&[x])).collect();
    all.sort();
    all.dedup();
    let mut k = 0;
    while k < all.len() {
        let cyclic: Vec<Elem> = g.elements().collect();
        for &x in &cyclic {
            let mut seed = all[k].clone();
            seed.push(x);
            let s = span(&seed);
            if !all.contains(&s) {
                all.push(s);
            }
        }
        k += 1;
    }
    all.sort();
    all
}

pub fn is_normal(g: &GroupTable, s: &[Elem]) -> bool {
    g.elements().all(|x| s.iter().all(|&y| s.binary_search(&g.conj(x, y)).is_ok()))
}

/// The same group with element `x` renamed `sigma[x]`; `sigma[0]` must be 0.
pub fn relabel(g: &GroupTable, sigma: &[Elem]) -> Arc<GroupTable> {
    let n = g.order();
    let mut table = vec![0 as Elem; n * n];
    for a in g.elements() {
        for b in g.elements() {
            table[sigma[a as usize] as usize * n + sigma[b as usize] as usize] = sigma[g.mul(a, b) as usize];
        }
    }
    let gens = g.generators().iter().map(|&x| sigma[x as usize]).collect();
    Arc::new(GroupTable::from_table(table, gens, "relabelled").unwrap())
}

/// Orbit counts of cat²-structures under `Aut(G)` acting on unordered
/// pairs, by Burnside's lemma: `(all classes, classes with non-cat¹
/// diagonal)`. Independent of the orbit walk used by `classify`.
pub fn burnside_cat2_classes(g: &Arc<GroupTable>) -> (usize, usize) {
    use std::collections::{HashMap, HashSet};

    let e = hdgroups::cat2::enumerate_cat2(g);
    let c1 = e.cat1();
    let n = c1.len();
    // An endomorphism is fixed by its generator images; pack those of t
    // and h into one key.
    let gens = g.generators();
    assert!(2 * gens.len() <= 16 && g.order() <= 256);
    let key = |t: &dyn Fn(Elem) -> Elem, h: &dyn Fn(Elem) -> Elem| -> u128 {
        gens.iter().fold(0u128, |acc, &x| (acc << 16) | ((t(x) as u128) << 8) | h(x) as u128)
    };
    let index: HashMap<u128, usize> =
        (0..n).map(|k| (key(&|x| c1.tail(k).map()[x as usize], &|x| c1.head(k).map()[x as usize]), k)).collect();
    let all: HashSet<(usize, usize)> = e.pairs().iter().map(|&(a, b)| (a as usize, b as usize)).collect();
    let bad: HashSet<(usize, usize)> = (0..e.len())
        .filter(|&k| !e.diagonal_is_cat1(k))
        .map(|k| (e.pairs()[k].0 as usize, e.pairs()[k].1 as usize))
        .collect();
    let auts = hdgroups::automorphism_group(g);
    let (mut fix_all, mut fix_bad) = (0, 0);
    for a in &auts.maps {
        let a = a.map();
        let mut ai = vec![0 as Elem; a.len()];
        for (x, &y) in a.iter().enumerate() {
            ai[y as usize] = x as Elem;
        }
        // α∘f∘α⁻¹
        let sigma: Vec<usize> = (0..n)
            .map(|k| {
                let (t, h) = (c1.tail(k).map(), c1.head(k).map());
                index[&key(&|x| a[t[ai[x as usize] as usize] as usize], &|x| a[h[ai[x as usize] as usize] as usize])]
            })
            .collect();
        let fixed: Vec<usize> = (0..n).filter(|&k| sigma[k] == k).collect();
        let count = |set: &HashSet<(usize, usize)>| {
            let mut c = 0;
            for (x, &i) in fixed.iter().enumerate() {
                c += fixed[x..].iter().filter(|&&j| set.contains(&(i, j))).count();
            }
            c + (0..n).filter(|&i| sigma[i] > i && sigma[sigma[i]] == i && set.contains(&(i, sigma[i]))).count()
        };
        fix_all += count(&all);
        fix_bad += count(&bad);
    }
    assert_eq!(fix_all % auts.len(), 0);
    assert_eq!(fix_bad % auts.len(), 0);
    (fix_all / auts.len(), fix_bad / auts.len())
}
