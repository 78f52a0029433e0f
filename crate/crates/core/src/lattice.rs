//! Full subgroup lattices of small groups.
//!
//! Built from the cyclic subgroups by repeatedly joining with a cyclic
//! subgroup until nothing new appears; every subgroup is a join of cyclic
//! subgroups, so the fixpoint is the whole lattice. Subgroups are keyed by
//! element set.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::bounds::Bounds;
use crate::elements::{lex_cmp, ElementSet, Elements};
use crate::error::Result;
use crate::formation::ClassOfGroups;
use crate::group::PermGroup;

pub struct SubgroupLattice {
    ambient: PermGroup,
    elements: Arc<Elements>,
    sets: Vec<ElementSet>,
    groups: Vec<PermGroup>,
    /// Strict supergroups of each node.
    supers: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    /// Every subgroup of `g`; fails when `|g|` exceeds the lattice bound.
    pub fn build(g: &PermGroup, bounds: &Bounds) -> Result<SubgroupLattice> {
        Bounds::check("lattice", bounds.lattice, g.order())?;
        let elements = g.elements(bounds.enumeration)?;
        elements.cayley();
        let n = elements.len();

        // One generator per distinct cyclic subgroup.
        let mut index: HashMap<ElementSet, usize> = HashMap::new();
        let mut sets: Vec<ElementSet> = Vec::new();
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut cyclic_gens: Vec<usize> = Vec::new();
        for x in 0..n {
            let set = elements.closure(&[x]);
            if !index.contains_key(&set) {
                index.insert(set.clone(), sets.len());
                sets.push(set);
                gens.push(if x == elements.identity_index() { vec![] } else { vec![x] });
                if x != elements.identity_index() {
                    cyclic_gens.push(x);
                }
            }
        }
        let mut next = 0;
        while next < sets.len() {
            let i = next;
            next += 1;
            for &c in &cyclic_gens {
                if sets[i].contains(c) {
                    continue;
                }
                let mut new_gens = gens[i].clone();
                new_gens.push(c);
                let set = elements.closure_from(&sets[i], &new_gens);
                if !index.contains_key(&set) {
                    index.insert(set.clone(), sets.len());
                    sets.push(set);
                    gens.push(new_gens);
                }
            }
        }

        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| {
            sets[a]
                .count_ones(..)
                .cmp(&sets[b].count_ones(..))
                .then_with(|| lex_cmp(&sets[a], &sets[b]))
        });
        let sets: Vec<ElementSet> = order.iter().map(|&i| sets[i].clone()).collect();
        let groups: Vec<PermGroup> = order
            .iter()
            .map(|&i| {
                let perms = gens[i].iter().map(|&x| elements.get(x).clone()).collect();
                PermGroup::from_gens(g.degree(), perms)
            })
            .collect();
        let index: HashMap<&ElementSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();

        let supers: Vec<Vec<usize>> = (0..sets.len())
            .map(|i| {
                let size = sets[i].count_ones(..);
                (i + 1..sets.len())
                    .filter(|&j| sets[j].count_ones(..) > size && sets[i].is_subset(&sets[j]))
                    .collect()
            })
            .collect();

        // Conjugacy orbits of subgroups under the generators of G.
        let conj: Vec<Vec<usize>> = g
            .generators()
            .iter()
            .map(|y| {
                elements
                    .perms()
                    .iter()
                    .map(|x| elements.index_of(&x.conjugate_by(y)).unwrap())
                    .collect()
            })
            .collect();
        let mut orbit_of = vec![usize::MAX; sets.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..sets.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let s = &sets[orbit[head]];
                head += 1;
                for table in &conj {
                    let mut image = elements.empty_set();
                    for x in s.ones() {
                        image.insert(table[x]);
                    }
                    let j = index[&image];
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        orbit.push(j);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }

        Ok(SubgroupLattice {
            ambient: g.clone(),
            elements,
            sets,
            groups,
            supers,
            orbit_of,
            orbits,
        })
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
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

    /// Index of the whole group (the last node).
    pub fn top(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn group(&self, i: usize) -> &PermGroup {
        &self.groups[i]
    }

    pub fn groups(&self) -> &[PermGroup] {
        &self.groups
    }

    pub fn set(&self, i: usize) -> &ElementSet {
        &self.sets[i]
    }

    pub fn supergroups(&self, i: usize) -> &[usize] {
        &self.supers[i]
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    pub fn index_of(&self, h: &PermGroup) -> Option<usize> {
        if !h.is_subgroup_of(&self.ambient) {
            return None;
        }
        let set = self.elements.set_of(h);
        self.sets.iter().position(|s| *s == set)
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        let top = self.top();
        (0..top).filter(|&i| self.supers[i] == [top]).collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<PermGroup> {
        self.maximal_indices()
            .into_iter()
            .map(|i| self.groups[i].clone())
            .collect()
    }

    /// Intersection of the maximal subgroups (the group itself when trivial).
    pub fn frattini_subgroup(&self) -> PermGroup {
        let mut acc = self.sets[self.top()].clone();
        for i in self.maximal_indices() {
            acc.intersect_with(&self.sets[i]);
        }
        self.elements.group_of(&acc)
    }

    /// Class membership for every node. The predicate runs once per
    /// conjugacy orbit, in parallel.
    pub fn membership(&self, x: &ClassOfGroups, bounds: &Bounds) -> Result<Vec<bool>> {
        let verdicts: Vec<bool> = self
            .orbits
            .par_iter()
            .map(|orbit| x.contains(&self.groups[orbit[0]], bounds))
            .collect::<Result<_>>()?;
        Ok(self.orbit_of.iter().map(|&o| verdicts[o]).collect())
    }

    /// Nodes in `X` not properly contained in another node in `X`.
    pub fn class_maximal_indices(&self, x: &ClassOfGroups, bounds: &Bounds) -> Result<Vec<usize>> {
        let member = self.membership(x, bounds)?;
        Ok((0..self.len())
            .filter(|&i| member[i] && !self.supers[i].iter().any(|&j| member[j]))
            .collect())
    }

    pub fn class_maximal_subgroups(&self, x: &ClassOfGroups, bounds: &Bounds) -> Result<Vec<PermGroup>> {
        Ok(self
            .class_maximal_indices(x, bounds)?
            .into_iter()
            .map(|i| self.groups[i].clone())
            .collect())
    }
}

pub fn all_subgroups(g: &PermGroup, bounds: &Bounds) -> Result<SubgroupLattice> {
    SubgroupLattice::build(g, bounds)
}

pub fn maximal_subgroups(lattice: &SubgroupLattice) -> Vec<PermGroup> {
    lattice.maximal_subgroups()
}

pub fn frattini_subgroup(lattice: &SubgroupLattice) -> PermGroup {
    lattice.frattini_subgroup()
}

pub fn class_maximal_subgroups(
    lattice: &SubgroupLattice,
    x: &ClassOfGroups,
    bounds: &Bounds,
) -> Result<Vec<PermGroup>> {
    lattice.class_maximal_subgroups(x, bounds)
}
