//! Explicit element lists for groups at desk scale.
//!
//! Elements are kept sorted by image list, so a subgroup's element set
//! (a bitset over indices) compares lexicographically exactly like its
//! sorted list of permutations.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::group::PermGroup;
use crate::perm::Perm;

pub type ElementSet = FixedBitSet;

pub struct Elements {
    perms: Vec<Perm>,
    index: HashMap<Perm, u32>,
    table: OnceLock<Vec<u32>>,
}

impl Elements {
    pub(crate) fn from_unsorted(mut perms: Vec<Perm>) -> Self {
        perms.sort_unstable();
        let index = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Elements {
            perms,
            index,
            table: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn get(&self, i: usize) -> &Perm {
        &self.perms[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Multiplication table, built on first use (`len²` entries).
    pub fn cayley(&self) -> &[u32] {
        self.table.get_or_init(|| {
            let n = self.len();
            let mut table = vec![0u32; n * n];
            for (i, a) in self.perms.iter().enumerate() {
                for (j, b) in self.perms.iter().enumerate() {
                    table[i * n + j] = self.index[&a.compose(b)];
                }
            }
            table
        })
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table.get() {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.index[&self.perms[i].compose(&self.perms[j])] as usize,
        }
    }

    pub fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn identity_index(&self) -> usize {
        // The identity is the lexicographically least image list.
        0
    }

    /// Element set of a subgroup of the enumerated group.
    pub fn set_of(&self, h: &PermGroup) -> ElementSet {
        let mut set = self.empty_set();
        h.for_each_element(|g| {
            set.insert(self.index[g] as usize);
        });
        set
    }

    pub fn set_from_perms<'a>(&self, perms: impl IntoIterator<Item = &'a Perm>) -> ElementSet {
        let mut set = self.empty_set();
        for p in perms {
            set.insert(self.index[p] as usize);
        }
        set
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = self.empty_set();
        let id = self.identity_index();
        set.insert(id);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// `⟨gens⟩`, seeded with `start` (which must lie inside it).
    pub fn closure_from(&self, start: &ElementSet, gens: &[usize]) -> ElementSet {
        let mut set = start.clone();
        set.insert(self.identity_index());
        let mut queue: Vec<usize> = set.ones().collect();
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Builds a `PermGroup` for an element set that is known to be a
    /// subgroup, choosing generators greedily in element order.
    pub fn group_of(&self, set: &ElementSet) -> PermGroup {
        let degree = self.perms[0].degree();
        let mut group = PermGroup::trivial(degree);
        for i in set.ones() {
            if group.order() as usize == set.count_ones(..) {
                break;
            }
            let p = &self.perms[i];
            if !group.has(p) {
                let mut gens = group.generators().to_vec();
                gens.push(p.clone());
                group = PermGroup::from_gens(degree, gens);
            }
        }
        group
    }

    pub fn perms_of<'a>(&'a self, set: &'a ElementSet) -> impl Iterator<Item = &'a Perm> + 'a {
        set.ones().map(move |i| &self.perms[i])
    }
}

/// Lexicographic comparison of two element sets as sorted index lists.
pub fn lex_cmp(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    a.ones().cmp(b.ones())
}

impl PermGroup {
    pub(crate) fn for_each_element(&self, f: impl FnMut(&Perm)) {
        self.chain().for_each_element(f)
    }
}
