//! Brute-force reference implementations over explicit element sets.
//! Nothing here goes through the stabilizer chain or the engine's lattices.

#![allow(dead_code)]

use std::collections::BTreeSet;

use quasihyper::{Perm, PermGroup};

pub type Set = BTreeSet<Perm>;

pub fn closure(degree: usize, gens: &[Perm]) -> Set {
    let mut set: Set = BTreeSet::new();
    set.insert(Perm::identity(degree));
    let mut queue = vec![Perm::identity(degree)];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.compose(g);
            if set.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    set
}

pub fn elements(g: &PermGroup) -> Vec<Perm> {
    closure(g.degree(), g.generators()).into_iter().collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Nilpotent iff for each prime `p` the elements of `p`-power order
/// number exactly `|G|_p` (every Sylow subgroup is normal).
pub fn is_nilpotent(set: &Set) -> bool {
    let n = set.len() as u64;
    (2..=n).filter(|&p| is_prime(p) && n.is_multiple_of(p)).all(|p| {
        let mut part = 1;
        while n.is_multiple_of(part * p) {
            part *= p;
        }
        set.iter().filter(|x| is_power_of(x.order(), p)).count() as u64 == part
    })
}

/// Closures of every element subset of size at most `log2 |G|`.
pub fn all_subgroups(g: &PermGroup) -> Vec<Set> {
    let elems = elements(g);
    let k = (usize::BITS - 1 - elems.len().leading_zeros()) as usize;
    let mut found: BTreeSet<Set> = BTreeSet::new();
    fn rec(elems: &[Perm], degree: usize, start: usize, chosen: &mut Vec<Perm>, k: usize, found: &mut BTreeSet<Set>) {
        found.insert(closure(degree, chosen));
        if chosen.len() == k {
            return;
        }
        for i in start..elems.len() {
            chosen.push(elems[i].clone());
            rec(elems, degree, i + 1, chosen, k, found);
            chosen.pop();
        }
    }
    rec(&elems, g.degree(), 0, &mut Vec::new(), k, &mut found);
    found.into_iter().collect()
}

fn maximal_among(family: &[&Set]) -> Vec<Set> {
    family
        .iter()
        .filter(|a| !family.iter().any(|b| b.len() > a.len() && a.is_subset(b)))
        .map(|a| (*a).clone())
        .collect()
}

pub fn nilpotent_intersection_order(g: &PermGroup) -> u64 {
    let subs = all_subgroups(g);
    let nilpotent: Vec<&Set> = subs.iter().filter(|s| is_nilpotent(s)).collect();
    let maximal = maximal_among(&nilpotent);
    let mut acc = maximal[0].clone();
    for m in &maximal[1..] {
        acc = acc.intersection(m).cloned().collect();
    }
    acc.len() as u64
}

pub fn is_minimal_non_nilpotent(g: &PermGroup) -> bool {
    let subs = all_subgroups(g);
    let order = g.order() as usize;
    if is_nilpotent(subs.iter().find(|s| s.len() == order).unwrap()) {
        return false;
    }
    let proper: Vec<&Set> = subs.iter().filter(|s| s.len() < order).collect();
    maximal_among(&proper).iter().all(is_nilpotent)
}

/// Subgroups of `H` normalized by `acting`: unions of `acting`-classes of
/// `H` that contain 1 and are closed under multiplication.
pub fn normal_subgroups(h: &[Perm], acting: &[Perm]) -> Vec<Set> {
    let mut classes: Vec<Set> = Vec::new();
    let mut seen: Set = BTreeSet::new();
    for x in h {
        if seen.contains(x) {
            continue;
        }
        let class: Set = acting.iter().map(|g| x.conjugate_by(g)).chain([x.clone()]).collect();
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    let id_class = classes.iter().position(|c| c.iter().any(Perm::is_identity)).unwrap();
    let others: Vec<&Set> = classes.iter().enumerate().filter(|(i, _)| *i != id_class).map(|(_, c)| c).collect();
    assert!(others.len() < 20, "too many classes for subset enumeration");
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut set = classes[id_class].clone();
        for (i, c) in others.iter().enumerate() {
            if mask & (1 << i) != 0 {
                set.extend(c.iter().cloned());
            }
        }
        if set.iter().all(|a| set.iter().all(|b| set.contains(&a.compose(b)))) {
            out.push(set);
        }
    }
    out
}

/// Pairs `(K, H)` of normal subgroups with nothing normal strictly between.
pub fn chief_pairs(normals: &[Set]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (k, ks) in normals.iter().enumerate() {
        for (h, hs) in normals.iter().enumerate() {
            if hs.len() > ks.len()
                && ks.is_subset(hs)
                && !normals
                    .iter()
                    .any(|m| m.len() > ks.len() && m.len() < hs.len() && ks.is_subset(m) && m.is_subset(hs))
            {
                out.push((k, h));
            }
        }
    }
    out
}

/// Some element of `H` acts on `H/K` like `g`.
fn induces_inner(g: &Perm, h: &Set, k: &Set) -> bool {
    h.iter().any(|y| {
        h.iter().all(|x| {
            let diff = x.conjugate_by(y).inverse().compose(&x.conjugate_by(g));
            k.contains(&diff)
        })
    })
}

/// Order of the largest normal subgroup below which every element of `G`
/// induces inner automorphisms on every chief factor.
pub fn inner_hypercenter_order(g: &PermGroup) -> u64 {
    let elems = elements(g);
    let normals = normal_subgroups(&elems, &elems);
    let pairs = chief_pairs(&normals);
    let good: Vec<bool> = pairs
        .iter()
        .map(|&(k, h)| elems.iter().all(|x| induces_inner(x, &normals[h], &normals[k])))
        .collect();
    normals
        .iter()
        .filter(|n| {
            pairs
                .iter()
                .zip(&good)
                .all(|(&(_, h), &ok)| ok || !normals[h].is_subset(n))
        })
        .map(|n| n.len() as u64)
        .max()
        .unwrap()
}

pub fn is_quasinilpotent(g: &PermGroup) -> bool {
    inner_hypercenter_order(g) == g.order()
}

/// Abelian chief factors central, non-abelian ones simple.
pub fn is_nca_member(g: &PermGroup) -> bool {
    let elems = elements(g);
    let normals = normal_subgroups(&elems, &elems);
    chief_pairs(&normals).into_iter().all(|(k, h)| {
        let (ks, hs) = (&normals[k], &normals[h]);
        let abelian = hs.iter().all(|a| hs.iter().all(|b| ks.contains(&a.commutator(b))));
        if abelian {
            hs.iter().all(|a| elems.iter().all(|x| ks.contains(&a.commutator(x))))
        } else {
            let hv: Vec<Perm> = hs.iter().cloned().collect();
            normal_subgroups(&hv, &hv)
                .iter()
                .all(|m| !(ks.is_subset(m) && m.len() > ks.len() && m.len() < hs.len()))
        }
    })
}
