//! Normal structure: the lattice of normal subgroups, chief series and
//! chief factors with the conjugation action of the ambient group.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bounds::Bounds;
use crate::elements::{lex_cmp, ElementSet, Elements};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops::{quotient_group, Quotient};
use crate::perm::Perm;

/// All normal subgroups of a group, ordered by (order, sorted element list).
/// Index 0 is the trivial subgroup and the last index is the group itself.
pub struct NormalSubgroups {
    group: PermGroup,
    elements: Arc<Elements>,
    sets: Vec<ElementSet>,
    groups: Vec<PermGroup>,
    by_set: HashMap<ElementSet, usize>,
}

impl NormalSubgroups {
    pub fn of(g: &PermGroup, bounds: &Bounds) -> Result<Arc<NormalSubgroups>> {
        g.normal_subgroups_cached(|| NormalSubgroups::compute(g, bounds))
    }

    fn compute(g: &PermGroup, bounds: &Bounds) -> Result<NormalSubgroups> {
        let elements = g.elements(bounds.enumeration)?;
        let n = elements.len();

        // Conjugacy classes, as orbits under conjugation by the generators.
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                let x = elements.get(class[head]);
                head += 1;
                for y in g.generators() {
                    let c = elements.index_of(&x.conjugate_by(y)).unwrap();
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        class.push(c);
                    }
                }
            }
            classes.push(class);
        }

        // Each normal subgroup is a join of normal closures of classes.
        let mut sets: Vec<ElementSet> = Vec::new();
        let mut groups: Vec<PermGroup> = Vec::new();
        let mut by_set: HashMap<ElementSet, usize> = HashMap::new();
        let insert = |group: PermGroup,
                      sets: &mut Vec<ElementSet>,
                      groups: &mut Vec<PermGroup>,
                      by_set: &mut HashMap<ElementSet, usize>| {
            let set = elements.set_of(&group);
            if let Some(&i) = by_set.get(&set) {
                return i;
            }
            by_set.insert(set.clone(), sets.len());
            sets.push(set);
            groups.push(group);
            sets.len() - 1
        };
        let trivial = PermGroup::trivial(g.degree());
        insert(trivial.clone(), &mut sets, &mut groups, &mut by_set);
        let mut class_closures: Vec<usize> = Vec::new();
        for class in &classes {
            let closure = trivial.closure_with(class.iter().map(|&i| elements.get(i)));
            class_closures.push(insert(closure, &mut sets, &mut groups, &mut by_set));
        }
        class_closures.sort_unstable();
        class_closures.dedup();
        let mut next = 0;
        while next < sets.len() {
            let i = next;
            next += 1;
            for &c in &class_closures {
                if sets[c].is_subset(&sets[i]) {
                    continue;
                }
                let joined = groups[i].join(&groups[c]);
                insert(joined, &mut sets, &mut groups, &mut by_set);
            }
        }

        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| {
            groups[a]
                .order()
                .cmp(&groups[b].order())
                .then_with(|| lex_cmp(&sets[a], &sets[b]))
        });
        let sets: Vec<ElementSet> = order.iter().map(|&i| sets[i].clone()).collect();
        let groups: Vec<PermGroup> = order.iter().map(|&i| groups[i].clone()).collect();
        let by_set = sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(NormalSubgroups {
            group: g.clone(),
            elements,
            sets,
            groups,
            by_set,
        })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.group
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn top(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn group(&self, i: usize) -> &PermGroup {
        &self.groups[i]
    }

    pub fn set(&self, i: usize) -> &ElementSet {
        &self.sets[i]
    }

    pub fn groups(&self) -> &[PermGroup] {
        &self.groups
    }

    pub fn index_of(&self, h: &PermGroup) -> Option<usize> {
        if !h.is_subgroup_of(&self.group) {
            return None;
        }
        self.by_set.get(&self.elements.set_of(h)).copied()
    }

    pub fn index_of_set(&self, set: &ElementSet) -> Option<usize> {
        self.by_set.get(set).copied()
    }

    /// Node `i` is contained in node `j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.sets[i].is_subset(&self.sets[j])
    }

    /// Normal subgroups `M ⊋ node i` with no normal subgroup strictly
    /// between, i.e. the minimal normal subgroups of `G / node i`, in
    /// ascending lexicographic order of their element sets.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && self.le(i, j))
            .collect();
        let mut covers: Vec<usize> = above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&m| m != j && self.le(m, j)))
            .collect();
        covers.sort_by(|&a, &b| lex_cmp(&self.sets[a], &self.sets[b]));
        covers
    }

    /// A normal subgroup strictly between nodes `lo` and `hi`, if any.
    pub fn strictly_between(&self, lo: usize, hi: usize) -> Option<usize> {
        (0..self.len()).find(|&m| m != lo && m != hi && self.le(lo, m) && self.le(m, hi))
    }
}

impl PermGroup {
    /// Every normal subgroup of the group.
    pub fn normal_subgroups(&self, bounds: &Bounds) -> Result<Vec<PermGroup>> {
        Ok(NormalSubgroups::of(self, bounds)?.groups.clone())
    }
}

/// Which minimal normal subgroup to lift when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lexicographically least sorted element list.
    #[default]
    Least,
    /// Lexicographically greatest; used to cross-check Jordan–Hölder invariance.
    Greatest,
}

pub fn minimal_normal_subgroups(g: &PermGroup, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    let normals = NormalSubgroups::of(g, bounds)?;
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    Ok(normals.covers(0).into_iter().map(|i| normals.group(i).clone()).collect())
}

pub struct ChiefSeries {
    ambient: PermGroup,
    terms: Vec<PermGroup>,
    factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    /// `1 = Z_0 < Z_1 < … < Z_n = G`; a single trivial term when `G = 1`.
    pub fn terms(&self) -> &[PermGroup] {
        &self.terms
    }

    pub fn factors(&self) -> &[ChiefFactor] {
        &self.factors
    }

    pub fn factor_orders(&self) -> Vec<u64> {
        self.factors.iter().map(ChiefFactor::order).collect()
    }
}

pub fn chief_series(g: &PermGroup, bounds: &Bounds) -> Result<ChiefSeries> {
    chief_series_with(g, TieBreak::Least, bounds)
}

pub fn chief_series_with(g: &PermGroup, tie: TieBreak, bounds: &Bounds) -> Result<ChiefSeries> {
    let normals = NormalSubgroups::of(g, bounds)?;
    let path = chief_path(&normals, 0, normals.top(), tie);
    let mut factors = Vec::with_capacity(path.len().saturating_sub(1));
    for w in path.windows(2) {
        factors.push(ChiefFactor::build(
            g,
            normals.group(w[0]),
            normals.group(w[1]),
            bounds,
        )?);
    }
    Ok(ChiefSeries {
        ambient: g.clone(),
        terms: path.iter().map(|&i| normals.group(i).clone()).collect(),
        factors,
    })
}

/// Node indices of a chief series of `G` from node `lo` up to node `hi`.
pub(crate) fn chief_path(normals: &NormalSubgroups, lo: usize, hi: usize, tie: TieBreak) -> Vec<usize> {
    let mut path = vec![lo];
    let mut cur = lo;
    while cur != hi {
        let covers: Vec<usize> = normals
            .covers(cur)
            .into_iter()
            .filter(|&m| normals.le(m, hi))
            .collect();
        cur = match tie {
            TieBreak::Least => covers[0],
            TieBreak::Greatest => *covers.last().unwrap(),
        };
        path.push(cur);
    }
    path
}

/// A chief factor `H/K` of `G`, realized on the right cosets of `K` in `H`.
#[derive(Clone)]
pub struct ChiefFactor {
    ambient: PermGroup,
    lower: PermGroup,
    upper: PermGroup,
    cosets: Quotient,
    action: Vec<Perm>,
    centralizer: PermGroup,
}

impl std::fmt::Debug for ChiefFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ChiefFactor")
            .field("lower_order", &self.lower.order())
            .field("upper_order", &self.upper.order())
            .field("centralizer_order", &self.centralizer.order())
            .finish()
    }
}

impl ChiefFactor {
    /// Builds the factor without checking that it is a chief factor.
    pub(crate) fn build(g: &PermGroup, k: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<Self> {
        let cosets = quotient_group(h, k, bounds)?;
        let mut cf = ChiefFactor {
            ambient: g.clone(),
            lower: k.clone(),
            upper: h.clone(),
            cosets,
            action: Vec::new(),
            centralizer: g.clone(),
        };
        cf.action = g.generators().iter().map(|x| cf.conjugation_on_cosets(x)).collect();
        cf.centralizer = if cf.action.iter().all(Perm::is_identity) {
            g.clone()
        } else {
            // g acts trivially iff it fixes the coset of every generator of H.
            let elements = g.elements(bounds.enumeration)?;
            let mut set = elements.empty_set();
            for (i, x) in elements.perms().iter().enumerate() {
                if h.generators()
                    .iter()
                    .all(|y| k.has(&y.inverse().compose(&y.conjugate_by(x))))
                {
                    set.insert(i);
                }
            }
            elements.group_of(&set)
        };
        Ok(cf)
    }

    fn conjugation_on_cosets(&self, g: &Perm) -> Perm {
        let images = self
            .cosets
            .representatives()
            .map(|r| self.cosets.coset_index(&r.conjugate_by(g)).unwrap() as u32)
            .collect();
        Perm::from_images_unchecked(images)
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    /// `K`.
    pub fn lower(&self) -> &PermGroup {
        &self.lower
    }

    /// `H`.
    pub fn upper(&self) -> &PermGroup {
        &self.upper
    }

    /// `H/K` acting regularly on the cosets of `K` in `H`.
    pub fn factor(&self) -> &PermGroup {
        self.cosets.group()
    }

    pub fn order(&self) -> u64 {
        self.upper.order() / self.lower.order()
    }

    /// Conjugation action of each generator of `G` on the cosets.
    pub fn action(&self) -> &[Perm] {
        &self.action
    }

    /// `C_G(H/K)`.
    pub fn centralizer(&self) -> &PermGroup {
        &self.centralizer
    }

    /// `|G / C_G(H/K)|`.
    pub fn automizer_order(&self) -> u64 {
        self.ambient.order() / self.centralizer.order()
    }

    pub fn is_central(&self) -> bool {
        self.centralizer.order() == self.ambient.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.factor().is_abelian()
    }

    /// Conjugation action of an arbitrary element of `G` on the cosets.
    pub fn action_of(&self, g: &Perm) -> Result<Perm> {
        if !self.ambient.contains(g)? {
            return Err(Error::input(format!("{g} is not in the ambient group")));
        }
        Ok(self.conjugation_on_cosets(g))
    }

    /// Whether `g` acts on `H/K` as conjugation by some element of `H`;
    /// returns such an element (a coset representative) as witness.
    /// Decided by comparing against every inner automorphism.
    pub fn induces_inner_automorphism(&self, g: &Perm) -> Result<Option<Perm>> {
        let target = self.action_of(g)?;
        Ok(self
            .cosets
            .representatives()
            .find(|r| self.conjugation_on_cosets(r) == target)
            .cloned())
    }

    /// Elements of `G` inducing inner automorphisms on `H/K`: the preimage
    /// of `Inn(H/K)` under the action, which is `H · C_G(H/K)`.
    pub fn inner_induction_subgroup(&self) -> PermGroup {
        self.upper.join(&self.centralizer)
    }

    /// Every generator of `G` induces an inner automorphism.
    pub fn all_inner(&self) -> bool {
        let inner = self.inner_induction_subgroup();
        self.ambient.generators().iter().all(|g| inner.has(g))
    }

    /// `(H/K) ⋊ G/C_G(H/K)` on the element set of `H/K`: right translations
    /// together with the conjugation action of `G`.
    pub fn factor_semidirect(&self, bounds: &Bounds) -> Result<PermGroup> {
        Bounds::check("semidirect", bounds.semidirect, self.order())?;
        Bounds::check(
            "enumeration",
            bounds.enumeration,
            self.order() * self.automizer_order(),
        )?;
        let mut gens = self.factor().generators().to_vec();
        gens.extend(self.action.iter().filter(|a| !a.is_identity()).cloned());
        Ok(PermGroup::from_gens(self.order() as usize, gens))
    }

    /// The factor group is simple (rather than a proper direct power).
    pub fn is_simple(&self, bounds: &Bounds) -> Result<bool> {
        let f = self.factor();
        if f.is_abelian() {
            return Ok(crate::formation::is_prime(f.order()));
        }
        Ok(NormalSubgroups::of(f, bounds)?.len() == 2)
    }
}

/// Validated constructor for a chief factor `H/K` of `G`.
pub fn chief_factor(g: &PermGroup, k: &PermGroup, h: &PermGroup, bounds: &Bounds) -> Result<ChiefFactor> {
    for (name, x) in [("K", k), ("H", h)] {
        if !x.is_normal_in(g) {
            return Err(Error::precondition(format!("{name} is not normal in G")));
        }
    }
    if !k.is_subgroup_of(h) || k.order() == h.order() {
        return Err(Error::precondition("K is not a proper subgroup of H"));
    }
    let normals = NormalSubgroups::of(g, bounds)?;
    let lo = normals.index_of(k).unwrap();
    let hi = normals.index_of(h).unwrap();
    if let Some(m) = normals.strictly_between(lo, hi) {
        let w = normals.group(m);
        return Err(Error::precondition(format!(
            "normal subgroup of order {} lies strictly between K and H: {:?}",
            w.order(),
            w.generators().iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    ChiefFactor::build(g, k, h, bounds)
}

/// Minimal normal subgroups of `G` whose direct product is `N`, for `N` a
/// normal subgroup that is a direct product of isomorphic non-abelian
/// simple groups.
pub fn semisimple_decomposition(g: &PermGroup, n: &PermGroup, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    if !n.is_normal_in(g) {
        return Err(Error::precondition("N is not normal in G"));
    }
    if n.is_trivial() || n.is_abelian() {
        return Err(Error::precondition("N is not a product of non-abelian simple groups"));
    }
    // N = T^k with T non-abelian simple iff its minimal normal subgroups are
    // non-abelian simple, pairwise alike, and multiply up to N.
    let own = minimal_normal_subgroups(n, bounds)?;
    let signature = |t: &PermGroup| -> Result<Vec<u64>> {
        let mut orders: Vec<u64> = t.elements(bounds.enumeration)?.perms().iter().map(Perm::order).collect();
        orders.sort_unstable();
        Ok(orders)
    };
    let first = signature(&own[0])?;
    let mut product = 1u64;
    for t in &own {
        if t.is_abelian() || NormalSubgroups::of(t, bounds)?.len() != 2 || signature(t)? != first {
            return Err(Error::precondition(
                "N is not a direct product of isomorphic non-abelian simple groups",
            ));
        }
        product = product.saturating_mul(t.order());
    }
    if product != n.order() {
        return Err(Error::precondition(
            "N is not a direct product of isomorphic non-abelian simple groups",
        ));
    }
    let normals = NormalSubgroups::of(g, bounds)?;
    let ni = normals.index_of(n).unwrap();
    Ok(normals
        .covers(0)
        .into_iter()
        .filter(|&m| normals.le(m, ni))
        .map(|m| normals.group(m).clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::*;
    use crate::ops::centralizer;

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    /// Oracle: every subset-closed-under-conjugation subgroup, by brute
    /// force over subgroups generated by up to two elements plus joins.
    fn brute_normal_count(g: &PermGroup) -> usize {
        let e = g.elements(1000).unwrap();
        let n = e.len();
        let mut found: std::collections::HashSet<ElementSet> = Default::default();
        let is_normal = |s: &ElementSet| {
            s.ones().all(|x| {
                g.generators()
                    .iter()
                    .all(|y| s.contains(e.index_of(&e.get(x).conjugate_by(y)).unwrap()))
            })
        };
        let mut all = Vec::new();
        for a in 0..n {
            for b in a..n {
                all.push(e.closure(&[a, b]));
            }
        }
        // every subgroup of the small groups used here is 2-generated
        let candidates = all;
        for c in candidates {
            if is_normal(&c) {
                found.insert(c);
            }
        }
        found.len()
    }

    #[test]
    fn normal_subgroup_counts_match_brute_force() {
        let b = Bounds::default();
        for g in [symmetric(4), dihedral(8), quaternion(), alternating(4), cyclic(6), elementary_abelian(2, 2)] {
            let normals = NormalSubgroups::of(&g, &b).unwrap();
            assert_eq!(normals.len(), brute_normal_count(&g), "{g:?}");
            assert!(normals.group(0).is_trivial());
            assert_eq!(normals.group(normals.top()), &g);
        }
    }

    #[test]
    fn minimal_normals() {
        let b = Bounds::default();
        let s4 = symmetric(4);
        let m = minimal_normal_subgroups(&s4, &b).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        let a5 = alternating(5);
        assert_eq!(minimal_normal_subgroups(&a5, &b).unwrap(), vec![a5.clone()]);
        let v = elementary_abelian(2, 2);
        let m = minimal_normal_subgroups(&v, &b).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.iter().all(|x| x.order() == 2));
        assert!(minimal_normal_subgroups(&PermGroup::trivial(3), &b).unwrap().is_empty());
    }

    #[test]
    fn chief_series_examples() {
        let b = Bounds::default();
        let s4 = chief_series(&symmetric(4), &b).unwrap();
        assert_eq!(s4.factor_orders(), vec![4, 3, 2]);
        assert_eq!(s4.terms()[2], alternating(4));
        let a5 = chief_series(&alternating(5), &b).unwrap();
        assert_eq!(a5.factor_orders(), vec![60]);
        let c6 = chief_series(&cyclic(6), &b).unwrap();
        let mut orders = c6.factor_orders();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);
        let triv = chief_series(&PermGroup::trivial(2), &b).unwrap();
        assert!(triv.factors().is_empty());
        for series in [&s4, &a5, &c6] {
            let prod: u64 = series.factor_orders().iter().product();
            assert_eq!(prod, series.ambient().order());
        }
    }

    #[test]
    fn chief_factor_of_v4_in_s4() {
        let b = Bounds::default();
        let s4 = symmetric(4);
        let v4 = PermGroup::new(4, vec![p(4, "(0 1)(2 3)"), p(4, "(0 2)(1 3)")]).unwrap();
        let cf = chief_factor(&s4, &PermGroup::trivial(4), &v4, &b).unwrap();
        assert_eq!(cf.order(), 4);
        assert_eq!(cf.centralizer(), &v4);
        assert_eq!(cf.automizer_order(), 6);
        // brute-force kernel: elements acting trivially on all cosets
        let e = s4.elements(24).unwrap();
        let kernel = e
            .perms()
            .iter()
            .filter(|x| cf.action_of(x).unwrap().is_identity())
            .count();
        assert_eq!(kernel, 4);
        let sd = cf.factor_semidirect(&b).unwrap();
        assert_eq!(sd.order(), 24);
        assert!(!cf.induces_inner_automorphism(&p(4, "(0 1 2)")).unwrap().is_some());
        assert_eq!(cf.inner_induction_subgroup(), v4);
    }

    #[test]
    fn chief_factor_rejects_non_chief_pairs() {
        let b = Bounds::default();
        let s4 = symmetric(4);
        let a4 = alternating(4);
        let err = chief_factor(&s4, &PermGroup::trivial(4), &a4, &b).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("order 4")));
        let t = PermGroup::new(4, vec![p(4, "(0 1)")]).unwrap();
        assert!(chief_factor(&s4, &PermGroup::trivial(4), &t, &b).is_err());
    }

    #[test]
    fn a5_in_s5() {
        let b = Bounds::default();
        let s5 = symmetric(5);
        let a5 = alternating(5);
        let cf = chief_factor(&s5, &PermGroup::trivial(5), &a5, &b).unwrap();
        assert_eq!(cf.order(), 60);
        assert!(cf.centralizer().is_trivial());
        assert_eq!(centralizer(&s5, &a5, &b).unwrap().order(), 1);
        let t = p(5, "(0 1)");
        assert_eq!(cf.induces_inner_automorphism(&t).unwrap(), None);
        let x = p(5, "(0 1 2)");
        let w = cf.induces_inner_automorphism(&x).unwrap().unwrap();
        assert_eq!(cf.action_of(&w).unwrap(), cf.action_of(&x).unwrap());
        assert_eq!(cf.inner_induction_subgroup(), a5);
        assert_eq!(cf.factor_semidirect(&b).unwrap().order(), 7200);
    }

    #[test]
    fn inner_induction_subgroup_is_preimage_of_inner_automorphisms() {
        let b = Bounds::default();
        for g in [symmetric(4), symmetric(5), special_linear_2(3), dihedral(12)] {
            let series = chief_series(&g, &b).unwrap();
            let e = g.elements(1000).unwrap();
            for cf in series.factors() {
                let inner = cf.inner_induction_subgroup();
                let mut count = 0;
                for x in e.perms() {
                    let brute = cf.induces_inner_automorphism(x).unwrap().is_some();
                    assert_eq!(brute, inner.has(x));
                    count += brute as u64;
                }
                assert_eq!(count, inner.order());
                assert!(cf.upper().is_subgroup_of(&inner));
                assert!(cf.centralizer().is_subgroup_of(&inner));
            }
        }
    }

    #[test]
    fn a5_inside_a5_times_s3() {
        let b = Bounds::default();
        let g = alternating(5).direct_product(&symmetric(3));
        let a5 = alternating(5).direct_product(&PermGroup::trivial(3));
        let cf = chief_factor(&g, &PermGroup::trivial(8), &a5, &b).unwrap();
        assert_eq!(cf.inner_induction_subgroup(), g);
        let sd = cf.factor_semidirect(&b).unwrap();
        assert_eq!(sd.order(), 3600);
    }

    #[test]
    fn semisimple_decompositions() {
        let b = Bounds::default();
        let a5 = alternating(5);
        assert_eq!(semisimple_decomposition(&a5, &a5, &b).unwrap(), vec![a5.clone()]);
        let aa = a5.direct_product(&a5);
        let parts = semisimple_decomposition(&aa, &aa, &b).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|x| x.order() == 60));
        let wr = wreath_with_c2(&a5);
        let socle = PermGroup::new(10, aa.generators().to_vec()).unwrap();
        let parts = semisimple_decomposition(&wr, &socle, &b).unwrap();
        assert_eq!(parts, vec![socle]);
        let s4 = symmetric(4);
        assert!(semisimple_decomposition(&s4, &alternating(4), &b).is_err());
    }
}
