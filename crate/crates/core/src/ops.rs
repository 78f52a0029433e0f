//! Standard subgroups, quotients and products of permutation groups.

use std::sync::Arc;

use crate::bounds::Bounds;
use crate::elements::Elements;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

fn require_subgroup(g: &PermGroup, s: &PermGroup, name: &str) -> Result<()> {
    if !s.is_subgroup_of(g) {
        return Err(Error::input(format!("{name} is not a subgroup of the ambient group")));
    }
    Ok(())
}

/// `C_G(S)`, by scanning the elements of `G`.
pub fn centralizer(g: &PermGroup, s: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    require_subgroup(g, s, "S")?;
    if s.is_trivial() {
        return Ok(g.clone());
    }
    let elements = g.elements(bounds.enumeration)?;
    let mut set = elements.empty_set();
    for (i, x) in elements.perms().iter().enumerate() {
        if s.generators().iter().all(|y| x.commutes_with(y)) {
            set.insert(i);
        }
    }
    Ok(elements.group_of(&set))
}

pub fn center(g: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    centralizer(g, g, bounds)
}

/// Smallest normal subgroup of `G` containing `S`.
pub fn normal_closure(g: &PermGroup, s: &PermGroup) -> Result<PermGroup> {
    require_subgroup(g, s, "S")?;
    Ok(normal_closure_of(g, s.generators()))
}

pub(crate) fn normal_closure_of(g: &PermGroup, seeds: &[Perm]) -> PermGroup {
    let mut n = PermGroup::trivial(g.degree()).closure_with(seeds);
    let mut queue: Vec<Perm> = n.generators().to_vec();
    while let Some(x) = queue.pop() {
        for y in g.generators() {
            let c = x.conjugate_by(y);
            if !n.has(&c) {
                n = n.closure_with([&c]);
                queue.push(c);
            }
        }
    }
    n
}

/// `[A, B]`: the normal closure in `⟨A, B⟩` of the generator commutators.
pub fn commutator_subgroup(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    require_subgroup(g, a, "A")?;
    require_subgroup(g, b, "B")?;
    Ok(commutator_of(a, b))
}

pub(crate) fn commutator_of(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let seeds: Vec<Perm> = a
        .generators()
        .iter()
        .flat_map(|x| b.generators().iter().map(move |y| x.commutator(y)))
        .filter(|c| !c.is_identity())
        .collect();
    normal_closure_of(&a.join(b), &seeds)
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    commutator_of(g, g)
}

/// `G/N` acting on the right cosets of `N`, with the projection map.
#[derive(Clone)]
pub struct Quotient {
    group: PermGroup,
    kernel: PermGroup,
    elements: Arc<Elements>,
    /// Coset index of each element of the ambient group.
    coset_of: Vec<u32>,
    /// Least element (by index) of each coset.
    reps: Vec<u32>,
}

impl Quotient {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_of(&self, g: &Perm) -> Result<usize> {
        self.elements
            .index_of(g)
            .map(|i| self.coset_of[i] as usize)
            .ok_or_else(|| Error::input(format!("{g} is not in the ambient group")))
    }

    /// Image of `g` in the quotient: its permutation of the cosets.
    pub fn project(&self, g: &Perm) -> Result<Perm> {
        let gi = self
            .elements
            .index_of(g)
            .ok_or_else(|| Error::input(format!("{g} is not in the ambient group")))?;
        Ok(self.project_index(gi))
    }

    /// Coset representatives, the least element of each coset.
    pub fn representatives(&self) -> impl Iterator<Item = &Perm> + '_ {
        self.reps.iter().map(|&r| self.elements.get(r as usize))
    }

    pub(crate) fn coset_index(&self, g: &Perm) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.coset_of[i] as usize)
    }

    fn project_index(&self, gi: usize) -> Perm {
        let images = self
            .reps
            .iter()
            .map(|&r| self.coset_of[self.elements.mul(r as usize, gi)])
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, sub: &PermGroup) -> PermGroup {
        let mut set = self.elements.empty_set();
        for i in 0..self.elements.len() {
            if sub.has(&self.project_index(i)) {
                set.insert(i);
            }
        }
        self.elements.group_of(&set)
    }
}

pub fn quotient_group(g: &PermGroup, n: &PermGroup, bounds: &Bounds) -> Result<Quotient> {
    if !n.is_subgroup_of(g) {
        return Err(Error::input("N is not a subgroup of G"));
    }
    if !n.is_normalized_by(g) {
        return Err(Error::precondition("N is not normal in G"));
    }
    let elements = g.elements(bounds.enumeration)?;
    let kernel_idx: Vec<usize> = {
        let mut v = Vec::with_capacity(n.order() as usize);
        n.for_each_element(|x| v.push(elements.index_of(x).unwrap()));
        v
    };
    let mut coset_of = vec![u32::MAX; elements.len()];
    let mut reps = Vec::new();
    for i in 0..elements.len() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(i as u32);
        for &k in &kernel_idx {
            coset_of[elements.mul(k, i)] = c;
        }
    }
    let mut q = Quotient {
        group: PermGroup::trivial(reps.len()),
        kernel: n.clone(),
        elements: Arc::clone(&elements),
        coset_of,
        reps,
    };
    let gens: Vec<Perm> = g
        .generators()
        .iter()
        .map(|x| q.project_index(elements.index_of(x).unwrap()))
        .collect();
    q.group = PermGroup::from_gens(q.index(), gens);
    Ok(q)
}

/// External semidirect product `N ⋊ H`.
///
/// `action[i]` is the automorphism of `N` attached to `H`'s `i`-th
/// generator, written as a permutation of `N`'s sorted element list
/// (see [`PermGroup::elements`]). The group is generated by the right
/// translations of `N` and the action images, on the element set of `N`.
/// When the action is not faithful, `H`'s own points are appended so that
/// the result still has order `|N|·|H|`.
pub fn semidirect_product(
    n: &PermGroup,
    h: &PermGroup,
    action: &[Perm],
    bounds: &Bounds,
) -> Result<PermGroup> {
    Bounds::check("semidirect", bounds.semidirect, n.order())?;
    if action.len() != h.generators().len() {
        return Err(Error::input(format!(
            "{} action images for {} generators",
            action.len(),
            h.generators().len()
        )));
    }
    let elements = n.elements(bounds.enumeration)?;
    let size = elements.len();
    let gen_idx: Vec<usize> = n
        .generators()
        .iter()
        .map(|x| elements.index_of(x).unwrap())
        .collect();
    for (i, alpha) in action.iter().enumerate() {
        if alpha.degree() != size {
            return Err(Error::input(format!(
                "action image {i} has degree {}, expected {size}",
                alpha.degree()
            )));
        }
        for x in 0..size {
            for &y in &gen_idx {
                if alpha.image(elements.mul(x, y)) != elements.mul(alpha.image(x), alpha.image(y)) {
                    return Err(Error::precondition(format!(
                        "action image {i} is not an automorphism: fails on elements {} and {}",
                        elements.get(x),
                        elements.get(y)
                    )));
                }
            }
        }
    }
    // (α_i, h_i) on the disjoint union of both point sets. The generator
    // assignment extends to a homomorphism H -> Aut(N) iff this graph
    // subgroup projects isomorphically onto H.
    let full_degree = size + h.degree();
    let graph_gens: Vec<Perm> = action
        .iter()
        .zip(h.generators())
        .map(|(a, x)| {
            let mut images: Vec<u32> = a.images().to_vec();
            images.extend(x.images().iter().map(|&v| v + size as u32));
            Perm::from_images_unchecked(images)
        })
        .collect();
    let graph = PermGroup::from_gens(full_degree, graph_gens.clone());
    if graph.order() != h.order() {
        return Err(Error::precondition(
            "action images do not define a homomorphism from H",
        ));
    }
    let image = PermGroup::from_gens(size, action.to_vec());
    let translations = gen_idx.iter().map(|&y| {
        Perm::from_images_unchecked((0..size).map(|x| elements.mul(x, y) as u32).collect())
    });
    if image.order() == h.order() {
        let mut gens: Vec<Perm> = translations.collect();
        gens.extend(action.iter().filter(|a| !a.is_identity()).cloned());
        Ok(PermGroup::from_gens(size, gens))
    } else {
        let mut gens: Vec<Perm> = translations.map(|t| t.embed(full_degree, 0)).collect();
        gens.extend(graph_gens);
        Ok(PermGroup::from_gens(full_degree, gens))
    }
}

/// Conjugation by `g` as a permutation of `N`'s sorted element list, for
/// building actions to pass to [`semidirect_product`].
pub fn conjugation_action(n: &PermGroup, g: &Perm, bounds: &Bounds) -> Result<Perm> {
    let elements = n.elements(bounds.enumeration)?;
    let images = elements
        .perms()
        .iter()
        .map(|x| {
            elements
                .index_of(&x.conjugate_by(g))
                .map(|i| i as u32)
                .ok_or_else(|| Error::precondition(format!("{g} does not normalize N")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Perm::from_images_unchecked(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use std::collections::HashSet;

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    fn brute_centralizer(g: &PermGroup, s: &PermGroup) -> usize {
        let all = g.elements(100_000).unwrap();
        let s_all = s.elements(100_000).unwrap();
        all.perms()
            .iter()
            .filter(|x| s_all.perms().iter().all(|y| (*x * y) == (y * *x)))
            .count()
    }

    #[test]
    fn centralizers() {
        let b = Bounds::default();
        let s3 = library::symmetric(3);
        let c3 = PermGroup::new(3, vec![p(3, "(0 1 2)")]).unwrap();
        let c = centralizer(&s3, &c3, &b).unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(brute_centralizer(&s3, &c3), 3);
        assert_eq!(c, c3);
        assert_eq!(centralizer(&s3, &PermGroup::trivial(3), &b).unwrap(), s3);
        let q8 = library::quaternion();
        assert_eq!(center(&q8, &b).unwrap().order(), 2);
        assert_eq!(brute_centralizer(&q8, &q8), 2);
        assert!(center(&s3, &b).unwrap().is_trivial());
        let c6 = library::cyclic(6);
        assert_eq!(center(&c6, &b).unwrap(), c6);
    }

    #[test]
    fn normal_closures() {
        let s3 = library::symmetric(3);
        let t = PermGroup::new(3, vec![p(3, "(0 1)")]).unwrap();
        assert_eq!(normal_closure(&s3, &t).unwrap(), s3);
        let s4 = library::symmetric(4);
        let v = PermGroup::new(4, vec![p(4, "(0 1)(2 3)")]).unwrap();
        let v4 = normal_closure(&s4, &v).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(normal_closure(&s4, &v4).unwrap(), v4);
    }

    #[test]
    fn commutators() {
        let s3 = library::symmetric(3);
        assert_eq!(commutator_subgroup(&s3, &s3, &s3).unwrap().order(), 3);
        let s4 = library::symmetric(4);
        let d = commutator_subgroup(&s4, &s4, &s4).unwrap();
        assert_eq!(d, library::alternating(4));
        assert!(commutator_subgroup(&s4, &s4, &PermGroup::trivial(4))
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn quotients() {
        let b = Bounds::default();
        let s4 = library::symmetric(4);
        let v4 = PermGroup::new(4, vec![p(4, "(0 1)(2 3)"), p(4, "(0 2)(1 3)")]).unwrap();
        let q = quotient_group(&s4, &v4, &b).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!q.group().is_abelian());
        // projection is a homomorphism on generator pairs
        for x in s4.generators() {
            for y in s4.generators() {
                let lhs = q.project(&x.compose(y)).unwrap();
                let rhs = q.project(x).unwrap().compose(&q.project(y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(q.preimage(&PermGroup::trivial(6)), v4);
        let a4 = library::alternating(4);
        assert_eq!(quotient_group(&s4, &a4, &b).unwrap().group().order(), 2);
        assert_eq!(
            quotient_group(&s4, &PermGroup::trivial(4), &b).unwrap().group().order(),
            24
        );
        let not_normal = PermGroup::new(4, vec![p(4, "(0 1)")]).unwrap();
        assert!(matches!(
            quotient_group(&s4, &not_normal, &b),
            Err(Error::Precondition(_))
        ));
    }

    /// Multiplication-table oracle: builds `N ⋊ H` as pairs `(n, h)` with
    /// `(n1, h1)(n2, h2) = (n1 · n2^{h1⁻¹}, h1 h2)` — any convention works
    /// for order and commutativity counts.
    fn pair_group_stats(n: &[Perm], h: &[Perm], act: impl Fn(&Perm, &Perm) -> Perm) -> (usize, bool) {
        let mut set = HashSet::new();
        let mut abelian = true;
        let elems: Vec<(Perm, Perm)> = n
            .iter()
            .flat_map(|x| h.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        let mul = |a: &(Perm, Perm), b: &(Perm, Perm)| {
            (a.0.compose(&act(&b.0, &a.1.inverse())), a.1.compose(&b.1))
        };
        for a in &elems {
            for b in &elems {
                let ab = mul(a, b);
                if ab != mul(b, a) {
                    abelian = false;
                }
                set.insert(ab);
            }
        }
        (set.len(), abelian)
    }

    #[test]
    fn semidirect_c3_by_inversion_is_s3() {
        let b = Bounds::default();
        let c3 = library::cyclic(3);
        let c2 = library::cyclic(2);
        let e = c3.elements(100).unwrap();
        let inv = Perm::from_images(
            e.perms()
                .iter()
                .map(|x| e.index_of(&x.inverse()).unwrap() as u32)
                .collect(),
        )
        .unwrap();
        let g = semidirect_product(&c3, &c2, &[inv], &b).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let (order, abelian) = pair_group_stats(
            e.perms(),
            c2.elements(10).unwrap().perms(),
            |x, y| if y.is_identity() { x.clone() } else { x.inverse() },
        );
        assert_eq!((order, abelian), (6, false));
    }

    fn element_orders(g: &PermGroup) -> Vec<u64> {
        let mut v: Vec<u64> = g.elements(100_000).unwrap().perms().iter().map(Perm::order).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn semidirect_trivial_action_matches_direct_product() {
        let b = Bounds::default();
        let c3 = library::cyclic(3);
        let s3 = library::symmetric(3);
        let id = Perm::identity(3);
        let sd = semidirect_product(&c3, &s3, &[id.clone(), id], &b).unwrap();
        let dp = c3.direct_product(&s3);
        assert_eq!(sd.order(), 18);
        assert_eq!(sd.order(), dp.order());
        assert_eq!(element_orders(&sd), element_orders(&dp));
    }

    #[test]
    fn semidirect_v4_by_s3_is_s4() {
        let b = Bounds::default();
        let s4 = library::symmetric(4);
        let v4 = PermGroup::new(4, vec![p(4, "(0 1)(2 3)"), p(4, "(0 2)(1 3)")]).unwrap();
        let s3 = PermGroup::new(4, vec![p(4, "(0 1 2)"), p(4, "(0 1)")]).unwrap();
        let action: Vec<Perm> = s3
            .generators()
            .iter()
            .map(|x| conjugation_action(&v4, x, &b).unwrap())
            .collect();
        let g = semidirect_product(&v4, &s3, &action, &b).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(derived_subgroup(&g).order(), 12);
        assert!(center(&g, &b).unwrap().is_trivial());
        let _ = s4;
    }

    #[test]
    fn semidirect_rejects_non_automorphism() {
        let b = Bounds::default();
        let c3 = library::cyclic(3);
        let c2 = library::cyclic(2);
        // swap identity with a generator: not an automorphism
        let bad = Perm::from_images(vec![1, 0, 2]).unwrap();
        assert!(matches!(
            semidirect_product(&c3, &c2, &[bad], &b),
            Err(Error::Precondition(_))
        ));
        // C2 generator mapped to an automorphism of order 3 is not a homomorphism
        let c3x = library::elementary_abelian(2, 2);
        let e = c3x.elements(10).unwrap();
        let mut images: Vec<u32> = (0..4).collect();
        images.swap(1, 2);
        images.swap(2, 3);
        let order3 = Perm::from_images(images).unwrap();
        assert_eq!(order3.order(), 3);
        let _ = e;
        assert!(matches!(
            semidirect_product(&c3x, &c2, &[order3], &b),
            Err(Error::Precondition(_))
        ));
    }
}
