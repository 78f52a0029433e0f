//! Classes of groups as values: membership predicates, canonical local
//! definitions, centrality of chief factors, quasi-𝔉 membership.

use std::fmt;
use std::sync::Arc;

use crate::bounds::Bounds;
use crate::chief::{chief_series, ChiefFactor};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::SubgroupLattice;
use crate::ops::commutator_of;

pub type Predicate = dyn Fn(&PermGroup, &Bounds) -> Result<bool> + Send + Sync;
pub type LocalDefinition = dyn Fn(u64) -> ClassOfGroups + Send + Sync;

#[derive(Clone)]
enum Kind {
    All,
    Abelian,
    Nilpotent,
    PGroups(u64),
    Nca,
    Quasi(Box<ClassOfGroups>),
    Custom(Arc<Predicate>),
}

/// An isomorphism-invariant class of finite groups.
#[derive(Clone)]
pub struct ClassOfGroups {
    name: String,
    kind: Kind,
    hereditary: bool,
    contains_nilpotent: bool,
    local: Option<Arc<LocalDefinition>>,
    /// The local definition was supplied by the caller; fullness and
    /// integration are taken on trust.
    local_asserted: bool,
}

impl fmt::Debug for ClassOfGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassOfGroups({})", self.name)
    }
}

impl ClassOfGroups {
    fn builtin(name: &str, kind: Kind, hereditary: bool, contains_nilpotent: bool) -> Self {
        ClassOfGroups {
            name: name.to_string(),
            kind,
            hereditary,
            contains_nilpotent,
            local: None,
            local_asserted: false,
        }
    }

    /// 𝔑, with canonical local definition `p ↦ 𝔑_p`.
    pub fn nilpotent() -> Self {
        let mut c = Self::builtin("N", Kind::Nilpotent, true, true);
        c.local = Some(Arc::new(|p| ClassOfGroups::p_groups(p).expect("prime")));
        c
    }

    /// 𝔑_p.
    pub fn p_groups(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(Self::builtin(&format!("Np:{p}"), Kind::PGroups(p), true, false))
    }

    /// 𝔑* = quasi-𝔑.
    pub fn quasinilpotent() -> Self {
        let mut c = Self::quasi(&Self::nilpotent()).expect("𝔑 contains 𝔑");
        c.name = "N*".to_string();
        c
    }

    /// 𝔑_ca: abelian chief factors central, non-abelian chief factors simple.
    pub fn nca() -> Self {
        Self::builtin("Nca", Kind::Nca, false, true)
    }

    pub fn abelian() -> Self {
        Self::builtin("abelian", Kind::Abelian, true, false)
    }

    /// All finite groups, with local definition `p ↦ all`.
    pub fn all() -> Self {
        let mut c = Self::builtin("all", Kind::All, true, true);
        c.local = Some(Arc::new(|_| ClassOfGroups::all()));
        c
    }

    /// 𝔉*: groups in which every element induces an inner automorphism on
    /// every 𝔉-eccentric chief factor. Requires 𝔑 ⊆ 𝔉.
    pub fn quasi(f: &ClassOfGroups) -> Result<Self> {
        if !f.contains_nilpotent {
            return Err(Error::precondition(format!(
                "quasi-{} needs a class containing all nilpotent groups",
                f.name
            )));
        }
        Ok(Self::builtin(
            &format!("{}*", f.name),
            Kind::Quasi(Box::new(f.clone())),
            false,
            true,
        ))
    }

    /// A caller-defined class. The predicate must be pure and invariant
    /// under relabeling of points.
    pub fn custom(
        name: impl Into<String>,
        hereditary: bool,
        contains_nilpotent: bool,
        member: impl Fn(&PermGroup, &Bounds) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        ClassOfGroups {
            name: name.into(),
            kind: Kind::Custom(Arc::new(member)),
            hereditary,
            contains_nilpotent,
            local: None,
            local_asserted: false,
        }
    }

    /// Attaches a local definition `p ↦ F(p)`. It is assumed, not checked,
    /// to be the canonical (full and integrated) one.
    pub fn with_local_definition(mut self, f: impl Fn(u64) -> ClassOfGroups + Send + Sync + 'static) -> Self {
        self.local = Some(Arc::new(f));
        self.local_asserted = true;
        self
    }

    /// Parses a selector: `N`, `Np:<prime>`, `N*`, `Nca`, `abelian`, `all`.
    pub fn parse(selector: &str) -> Result<Self> {
        match selector {
            "N" => Ok(Self::nilpotent()),
            "N*" => Ok(Self::quasinilpotent()),
            "Nca" => Ok(Self::nca()),
            "abelian" => Ok(Self::abelian()),
            "all" => Ok(Self::all()),
            s => match s.strip_prefix("Np:") {
                Some(p) => {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::input(format!("bad prime in class selector {s:?}")))?;
                    Self::p_groups(p)
                }
                None => Err(Error::input(format!("unknown class selector {s:?}"))),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_hereditary(&self) -> bool {
        self.hereditary
    }

    pub fn contains_nilpotent(&self) -> bool {
        self.contains_nilpotent
    }

    pub fn has_local_definition(&self) -> bool {
        self.local.is_some()
    }

    pub fn local_definition_asserted(&self) -> bool {
        self.local_asserted
    }

    /// `F(p)` of the local definition, when there is one.
    pub fn local_definition(&self, p: u64) -> Option<ClassOfGroups> {
        self.local.as_ref().map(|f| f(p))
    }

    pub fn contains(&self, g: &PermGroup, bounds: &Bounds) -> Result<bool> {
        match &self.kind {
            Kind::All => Ok(true),
            Kind::Abelian => Ok(g.is_abelian()),
            Kind::Nilpotent => Ok(is_nilpotent(g)),
            Kind::PGroups(p) => Ok(is_power_of(g.order(), *p)),
            Kind::Nca => is_nca_member(g, bounds),
            Kind::Quasi(f) => is_quasi_f(g, f, bounds),
            Kind::Custom(pred) => pred(g, bounds),
        }
    }
}

/// How [`is_class_central_with`] decides centrality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralityPath {
    /// Membership of `(H/K) ⋊ G/C_G(H/K)` in the class.
    Definitional,
    /// `G/C_G(H/K) ∈ F(p)` for every prime `p` dividing `|H/K|`.
    LocalDefinition,
    /// Local definition when the class is hereditary and has one; otherwise
    /// the definition. Falls back to the local definition when the
    /// semidirect product exceeds the bounds.
    Auto,
}

pub fn is_class_central(cf: &ChiefFactor, x: &ClassOfGroups, bounds: &Bounds) -> Result<bool> {
    is_class_central_with(cf, x, CentralityPath::Auto, bounds)
}

pub fn is_class_central_with(
    cf: &ChiefFactor,
    x: &ClassOfGroups,
    path: CentralityPath,
    bounds: &Bounds,
) -> Result<bool> {
    let fast_ok = x.hereditary && x.local.is_some();
    match path {
        CentralityPath::Definitional => x.contains(&cf.factor_semidirect(bounds)?, bounds),
        CentralityPath::LocalDefinition => {
            if x.local.is_none() {
                return Err(Error::precondition(format!(
                    "class {} has no local definition",
                    x.name
                )));
            }
            central_by_local_definition(cf, x, bounds)
        }
        CentralityPath::Auto if fast_ok => central_by_local_definition(cf, x, bounds),
        CentralityPath::Auto => match cf.factor_semidirect(bounds) {
            Ok(sd) => x.contains(&sd, bounds),
            Err(e @ Error::BoundExceeded { .. }) => {
                if x.local.is_some() {
                    central_by_local_definition(cf, x, bounds)
                } else {
                    Err(e)
                }
            }
            Err(e) => Err(e),
        },
    }
}

fn central_by_local_definition(cf: &ChiefFactor, x: &ClassOfGroups, bounds: &Bounds) -> Result<bool> {
    let automizer = if cf.is_central() {
        PermGroup::trivial(1)
    } else {
        crate::ops::quotient_group(cf.ambient(), cf.centralizer(), bounds)?
            .group()
            .clone()
    };
    for p in prime_divisors(cf.order()) {
        let fp = x.local_definition(p).unwrap();
        if !fp.contains(&automizer, bounds)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lower central series reaches the trivial group.
pub fn is_nilpotent(g: &PermGroup) -> bool {
    let n = g.order();
    if n == 1 || prime_divisors(n).len() == 1 {
        return true;
    }
    let mut term = g.clone();
    loop {
        let next = commutator_of(&term, g);
        if next.is_trivial() {
            return true;
        }
        if next.order() == term.order() {
            return false;
        }
        term = next;
    }
}

pub fn is_p_group(g: &PermGroup, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::input(format!("{p} is not prime")));
    }
    Ok(is_power_of(g.order(), p))
}

/// Every chief factor is either 𝔉-central or acted on by inner
/// automorphisms only. One chief series is checked; generators suffice
/// because the inner-inducing elements form a subgroup.
pub fn is_quasi_f(g: &PermGroup, f: &ClassOfGroups, bounds: &Bounds) -> Result<bool> {
    if !f.contains_nilpotent {
        return Err(Error::precondition(format!(
            "quasi-{} needs a class containing all nilpotent groups",
            f.name
        )));
    }
    if g.is_trivial() {
        return Ok(true);
    }
    for cf in chief_series(g, bounds)?.factors() {
        if !cf.all_inner() && !is_class_central(cf, f, bounds)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_quasinilpotent(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    is_quasi_f(g, &ClassOfGroups::nilpotent(), bounds)
}

pub fn is_nca_member(g: &PermGroup, bounds: &Bounds) -> Result<bool> {
    if g.is_trivial() {
        return Ok(true);
    }
    for cf in chief_series(g, bounds)?.factors() {
        let ok = if cf.is_abelian() {
            cf.is_central()
        } else {
            cf.is_simple(bounds)?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Corpus groups outside `X` whose maximal subgroups all lie in `X`.
pub fn s_critical_groups(corpus: &[PermGroup], x: &ClassOfGroups, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    let mut out = Vec::new();
    for g in corpus {
        if is_s_critical(g, x, bounds)? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

pub fn is_s_critical(g: &PermGroup, x: &ClassOfGroups, bounds: &Bounds) -> Result<bool> {
    if x.contains(g, bounds)? {
        return Ok(false);
    }
    let lattice = SubgroupLattice::build(g, bounds)?;
    for m in lattice.maximal_subgroups() {
        if !x.contains(&m, bounds)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
