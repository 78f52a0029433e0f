//! Deterministic Schreier–Sims.
//!
//! Level `k` holds base point `b_k`, the strong generators fixing
//! `b_0 … b_{k-1}`, and a transversal of the orbit of `b_k` under them.
//! Every group element factors uniquely as `u_{L-1} ⋯ u_1 u_0` with `u_k`
//! drawn from the transversal of level `k`.

use crate::perm::Perm;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Perm>,
    /// Orbit points in discovery order.
    pub orbit: Vec<u32>,
    /// `reps[b]` maps the base point to `b`.
    reps: Vec<Option<Perm>>,
    inv_reps: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        let mut reps: Vec<Option<Perm>> = vec![None; degree];
        reps[self.base] = Some(Perm::identity(degree));
        let mut orbit = vec![self.base as u32];
        let mut head = 0;
        while head < orbit.len() {
            let b = orbit[head] as usize;
            head += 1;
            for x in &self.gens {
                let c = x.image(b);
                if reps[c].is_none() {
                    let rep = reps[b].as_ref().unwrap().compose(x);
                    reps[c] = Some(rep);
                    orbit.push(c as u32);
                }
            }
        }
        self.inv_reps = reps.iter().map(|r| r.as_ref().map(Perm::inverse)).collect();
        self.reps = reps;
        self.orbit = orbit;
    }

    #[inline]
    pub fn rep(&self, point: usize) -> Option<&Perm> {
        self.reps[point].as_ref()
    }

    #[inline]
    fn inv_rep(&self, point: usize) -> Option<&Perm> {
        self.inv_reps[point].as_ref()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        // Initial base: every generator must move some base point.
        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved_point().unwrap());
            }
        }
        for (k, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = gens
                .iter()
                .filter(|g| base[..k].iter().all(|&c| g.image(c) == c))
                .cloned()
                .collect();
            level.rebuild(degree);
            chain.levels.push(level);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.find_failing_schreier_generator(level) {
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.first_moved_point().unwrap();
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in level + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild(self.degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_failing_schreier_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[i];
        for &b in &level.orbit {
            let u_b = level.rep(b as usize).unwrap();
            for x in &level.gens {
                let c = x.image(b as usize);
                let s = u_b.compose(x).compose(level.inv_rep(c).unwrap());
                if s.is_identity() {
                    continue;
                }
                let (h, j) = self.strip(s, i + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the index
    /// of the level where sifting stopped (`levels.len()` if it went through).
    pub fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (k, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.image(level.base);
            match level.inv_rep(beta) {
                Some(inv) => g = g.compose(inv),
                None => return (g, k),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Visits every element exactly once.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm)) {
        fn walk(levels: &[Level], acc: &Perm, f: &mut dyn FnMut(&Perm)) {
            match levels.split_last() {
                None => f(acc),
                Some((last, rest)) => {
                    // Builds u_{L-1} ⋯ u_0 from the deepest level outward.
                    for &b in &last.orbit {
                        let next = acc.compose(last.rep(b as usize).unwrap());
                        walk(rest, &next, f);
                    }
                }
            }
        }
        walk(&self.levels, &Perm::identity(self.degree), &mut f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn closure(gens: &[Perm], degree: usize) -> HashSet<Perm> {
        let mut seen = HashSet::new();
        let id = Perm::identity(degree);
        let mut stack = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn a5_order_and_elements_match_closure() {
        let gens = vec![
            Perm::parse_cycles(5, "(0 1 2 3 4)").unwrap(),
            Perm::parse_cycles(5, "(0 1 2)").unwrap(),
        ];
        let chain = StabChain::new(5, &gens);
        assert_eq!(chain.order(), 60);
        let brute = closure(&gens, 5);
        assert_eq!(brute.len(), 60);
        let mut listed = HashSet::new();
        chain.for_each_element(|g| {
            assert!(brute.contains(g));
            listed.insert(g.clone());
        });
        assert_eq!(listed.len(), 60);
        assert!(!chain.contains(&Perm::parse_cycles(5, "(0 1)").unwrap()));
    }

    #[test]
    fn trivial_chain() {
        let chain = StabChain::new(4, &[]);
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Perm::identity(4)));
        let mut n = 0;
        chain.for_each_element(|_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn generator_fixing_first_base_point() {
        // Second generator fixes point 0, forcing a second initial base point.
        let gens = vec![
            Perm::parse_cycles(6, "(0 1)").unwrap(),
            Perm::parse_cycles(6, "(2 3 4 5)").unwrap(),
        ];
        let chain = StabChain::new(6, &gens);
        assert_eq!(chain.order(), 8);
        assert_eq!(closure(&gens, 6).len(), 8);
    }
}
