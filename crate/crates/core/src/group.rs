//! Finite permutation groups given by generators.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::chief::NormalSubgroups;
use crate::elements::Elements;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// A permutation group with an eagerly built stabilizer chain.
///
/// Cloning is cheap. Subgroups are themselves `PermGroup`s on the same
/// degree; use [`PermGroup::subgroup`] to build one with membership checked
/// against an ambient group.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
    order: u64,
    elements: OnceLock<Arc<Elements>>,
    normals: OnceLock<Arc<NormalSubgroups>>,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::input(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let chain = StabChain::new(degree, &gens);
        let order = u64::try_from(chain.order())
            .map_err(|_| Error::input("group order does not fit in 64 bits"))?;
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators: gens,
                chain,
                order,
                elements: OnceLock::new(),
                normals: OnceLock::new(),
            }),
        })
    }

    pub(crate) fn from_gens(degree: usize, gens: Vec<Perm>) -> Self {
        PermGroup::new(degree, gens).expect("generators of consistent degree")
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_gens(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.generators
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.inner.degree)
    }

    pub(crate) fn chain(&self) -> &StabChain {
        &self.inner.chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.inner.chain.strong_generators()
    }

    /// Orbit lengths along the stabilizer chain; their product is the order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.inner
            .chain
            .levels()
            .iter()
            .map(|l| l.orbit.len())
            .collect()
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::input(format!(
                "permutation has degree {}, group has degree {}",
                p.degree(),
                self.degree()
            )));
        }
        Ok(self.inner.chain.contains(p))
    }

    #[inline]
    pub(crate) fn has(&self, p: &Perm) -> bool {
        self.inner.chain.contains(p)
    }

    /// Builds the subgroup generated by `gens`, checking each is a member.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::input(format!("{g} is not an element of the group")));
            }
        }
        PermGroup::new(self.degree(), gens)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.has(g))
    }

    /// Normalized by every generator of `ambient`.
    pub fn is_normalized_by(&self, ambient: &PermGroup) -> bool {
        ambient.generators().iter().all(|g| {
            self.generators()
                .iter()
                .all(|n| self.has(&n.conjugate_by(g)))
        })
    }

    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient) && self.is_normalized_by(ambient)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().filter(|g| !self.has(g)).cloned());
        PermGroup::from_gens(self.degree(), gens)
    }

    /// Adds generators one at a time, skipping members, so the generating
    /// list stays short.
    pub(crate) fn closure_with<'a>(&self, extra: impl IntoIterator<Item = &'a Perm>) -> PermGroup {
        let mut group = self.clone();
        for g in extra {
            if !group.has(g) {
                let mut gens = group.generators().to_vec();
                gens.push(g.clone());
                group = PermGroup::from_gens(self.degree(), gens);
            }
        }
        group
    }

    /// The sorted element list, enumerated once and cached. Fails when the
    /// order exceeds `bound`.
    pub fn elements(&self, bound: u64) -> Result<Arc<Elements>> {
        if let Some(e) = self.inner.elements.get() {
            return Ok(Arc::clone(e));
        }
        if self.order() > bound {
            return Err(Error::BoundExceeded {
                what: "enumeration",
                bound,
                needed: self.order(),
            });
        }
        let mut perms = Vec::with_capacity(self.order() as usize);
        self.inner.chain.for_each_element(|g| perms.push(g.clone()));
        let elements = Arc::new(Elements::from_unsorted(perms));
        Ok(Arc::clone(self.inner.elements.get_or_init(|| elements)))
    }

    pub(crate) fn normal_subgroups_cached(
        &self,
        compute: impl FnOnce() -> Result<NormalSubgroups>,
    ) -> Result<Arc<NormalSubgroups>> {
        if let Some(n) = self.inner.normals.get() {
            return Ok(Arc::clone(n));
        }
        let computed = Arc::new(compute()?);
        Ok(Arc::clone(self.inner.normals.get_or_init(|| computed)))
    }

    /// Direct product on `degree(A) + degree(B)` points.
    pub fn direct_product(&self, other: &PermGroup) -> PermGroup {
        let degree = self.degree() + other.degree();
        let mut gens: Vec<Perm> = self
            .generators()
            .iter()
            .map(|g| g.embed(degree, 0))
            .collect();
        gens.extend(
            other
                .generators()
                .iter()
                .map(|g| g.embed(degree, self.degree())),
        );
        PermGroup::from_gens(degree, gens)
    }

    /// Group definition text: `degree N` then one generator per line.
    pub fn to_definition_text(&self) -> String {
        let mut out = format!("degree {}\n", self.degree());
        for g in self.generators() {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }
}

impl PartialEq for PermGroup {
    /// Equal as sets: same degree, same order, mutual generator membership.
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && self.generators().iter().all(|g| other.has(g))
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}
