//! Class hypercenters, intersections of class-maximal subgroups, and the
//! verification suites that compare them.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::Bounds;
use crate::chief::{chief_path, ChiefFactor, NormalSubgroups, TieBreak};
use crate::corpus::CorpusEntry;
use crate::error::{Error, Result};
use crate::formation::{is_class_central, ClassOfGroups};
use crate::group::PermGroup;
use crate::lattice::SubgroupLattice;
use crate::ops::{center, quotient_group};

/// One examined chief factor `M/Z` of the climb.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClimbStep {
    /// `|M|`, the candidate next term.
    pub term_order: u64,
    pub factor_order: u64,
    pub central: bool,
}

#[derive(Debug, Clone)]
pub struct HypercenterResult {
    pub class: String,
    pub z: PermGroup,
    /// Every factor examined, in order. Accepted steps are the central ones.
    pub trace: Vec<ClimbStep>,
}

/// Memoized verdicts per (lower, upper) pair of normal-subgroup indices.
type FactorTest<'a> = Box<dyn Fn(&ChiefFactor) -> Result<bool> + Sync + 'a>;

struct Verdicts<'a> {
    g: &'a PermGroup,
    normals: &'a NormalSubgroups,
    bounds: &'a Bounds,
    cache: Mutex<HashMap<(usize, usize), bool>>,
    test: FactorTest<'a>,
}

impl<'a> Verdicts<'a> {
    fn new(
        g: &'a PermGroup,
        normals: &'a NormalSubgroups,
        bounds: &'a Bounds,
        test: impl Fn(&ChiefFactor) -> Result<bool> + Sync + 'a,
    ) -> Self {
        Verdicts {
            g,
            normals,
            bounds,
            cache: Mutex::new(HashMap::new()),
            test: Box::new(test),
        }
    }

    fn get(&self, lo: usize, hi: usize) -> Result<bool> {
        if let Some(&v) = self.cache.lock().unwrap().get(&(lo, hi)) {
            return Ok(v);
        }
        let cf = ChiefFactor::build(self.g, self.normals.group(lo), self.normals.group(hi), self.bounds)?;
        let v = (self.test)(&cf)?;
        self.cache.lock().unwrap().insert((lo, hi), v);
        Ok(v)
    }

    /// Greedy climb from the trivial subgroup: take the lexicographically
    /// first cover whose factor passes, until none does.
    fn climb(&self) -> Result<(usize, Vec<ClimbStep>)> {
        let normals = self.normals;
        let mut cur = 0;
        let mut trace = Vec::new();
        'climb: loop {
            for m in normals.covers(cur) {
                let central = self.get(cur, m)?;
                trace.push(ClimbStep {
                    term_order: normals.group(m).order(),
                    factor_order: normals.group(m).order() / normals.group(cur).order(),
                    central,
                });
                if central {
                    cur = m;
                    continue 'climb;
                }
            }
            return Ok((cur, trace));
        }
    }

    /// Product of every normal subgroup whose chief series from 1 passes
    /// at each step.
    fn oracle(&self) -> Result<PermGroup> {
        let normals = self.normals;
        let mut z = PermGroup::trivial(self.g.degree());
        for n in 1..normals.len() {
            let path = chief_path(normals, 0, n, TieBreak::Least);
            let mut ok = true;
            for w in path.windows(2) {
                if !self.get(w[0], w[1])? {
                    ok = false;
                    break;
                }
            }
            if ok {
                z = z.join(normals.group(n));
            }
        }
        Ok(z)
    }
}

/// `Z_X(G)` by a greedy climb through the normal-subgroup lattice.
pub fn hypercenter(g: &PermGroup, x: &ClassOfGroups, bounds: &Bounds) -> Result<HypercenterResult> {
    let normals = NormalSubgroups::of(g, bounds)?;
    let verdicts = Verdicts::new(g, &normals, bounds, |cf| is_class_central(cf, x, bounds));
    let (top, trace) = verdicts.climb()?;
    Ok(HypercenterResult {
        class: x.name().to_string(),
        z: normals.group(top).clone(),
        trace,
    })
}

/// `Z_X(G)` straight from the definition: the product of all normal
/// subgroups with every chief factor below them `X`-central.
pub fn hypercenter_oracle(g: &PermGroup, x: &ClassOfGroups, bounds: &Bounds) -> Result<PermGroup> {
    let normals = NormalSubgroups::of(g, bounds)?;
    let verdicts = Verdicts::new(g, &normals, bounds, |cf| is_class_central(cf, x, bounds));
    verdicts.oracle()
}

/// Intersection of all `X`-maximal subgroups of `G`.
pub fn intersection_of_class_maximal(g: &PermGroup, x: &ClassOfGroups, bounds: &Bounds) -> Result<PermGroup> {
    let lattice = SubgroupLattice::build(g, bounds)?;
    intersection_in(&lattice, x, bounds)
}

fn intersection_in(lattice: &SubgroupLattice, x: &ClassOfGroups, bounds: &Bounds) -> Result<PermGroup> {
    let maximal = lattice.class_maximal_indices(x, bounds)?;
    let mut acc = lattice.set(lattice.top()).clone();
    for i in maximal {
        acc.intersect_with(lattice.set(i));
    }
    Ok(lattice.elements().group_of(&acc))
}

/// Largest normal subgroup below which every element of `G` induces an
/// inner automorphism on every chief factor.
pub fn inner_induction_hypercenter(g: &PermGroup, bounds: &Bounds) -> Result<PermGroup> {
    let normals = NormalSubgroups::of(g, bounds)?;
    let verdicts = Verdicts::new(g, &normals, bounds, |cf| Ok(cf.all_inner()));
    let (top, _) = verdicts.climb()?;
    Ok(normals.group(top).clone())
}

/// `1 = Z_0 ≤ Z_1 ≤ …`, stopping at the first repeated term.
pub fn upper_central_series(g: &PermGroup, bounds: &Bounds) -> Result<Vec<PermGroup>> {
    let mut series = vec![PermGroup::trivial(g.degree())];
    loop {
        let last = series.last().unwrap();
        let q = quotient_group(g, last, bounds)?;
        let next = q.preimage(&center(q.group(), bounds)?);
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

/// One record of a verification run.
///
/// For the inner-induction check the `int_*` fields describe the
/// inner-induction hypercenter rather than an intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub group_id: String,
    pub order: u64,
    pub class: String,
    pub z_order: u64,
    pub int_order: u64,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ucs_order: Option<u64>,
    pub z_le_int: bool,
    pub passed: bool,
    pub z_generators: Vec<String>,
    pub int_generators: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    #[serde(skip)]
    pub error_code: Option<i32>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    fn failed(check: &str, entry: &CorpusEntry, class: &str, err: Error) -> Self {
        VerificationReport {
            check: check.to_string(),
            group_id: entry.id.clone(),
            order: entry.group.order(),
            class: class.to_string(),
            z_order: 0,
            int_order: 0,
            equal: false,
            ucs_order: None,
            z_le_int: false,
            passed: false,
            z_generators: Vec::new(),
            int_generators: Vec::new(),
            witness: Vec::new(),
            error: Some(err.to_string()),
            millis: None,
            error_code: Some(err.exit_code()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// `Int = Z` for the quasi-class of a formation.
    Corollary,
    /// `Int_N = Z_N = Z_∞`.
    Baer,
    /// Inner-induction hypercenter against `Z_{N*}`.
    Remark4,
    /// `Z ≤ Int` for the quasi-class only.
    LemmaA,
    /// `Z` and `Int` for `N_ca`, nothing asserted.
    CompareNca,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Corollary => "corollary",
            Check::Baer => "baer",
            Check::Remark4 => "remark4",
            Check::LemmaA => "lemma-a",
            Check::CompareNca => "compare-nca",
        }
    }
}

fn generator_strings(h: &PermGroup) -> Vec<String> {
    h.generators().iter().map(ToString::to_string).collect()
}

fn symmetric_difference(g: &PermGroup, a: &PermGroup, b: &PermGroup, bounds: &Bounds) -> Result<Vec<String>> {
    let e = g.elements(bounds.enumeration)?;
    let mut diff = e.set_of(a);
    diff.symmetric_difference_with(&e.set_of(b));
    Ok(e.perms_of(&diff).map(ToString::to_string).collect())
}

fn run_one(check: Check, entry: &CorpusEntry, f: &ClassOfGroups, bounds: &Bounds) -> Result<VerificationReport> {
    let g = &entry.group;
    let (class, z, int, ucs) = match check {
        Check::Corollary | Check::LemmaA => {
            let x = ClassOfGroups::quasi(f)?;
            let z = hypercenter(g, &x, bounds)?.z;
            let int = intersection_of_class_maximal(g, &x, bounds)?;
            (x.name().to_string(), z, int, None)
        }
        Check::Baer => {
            let x = ClassOfGroups::nilpotent();
            let z = hypercenter(g, &x, bounds)?.z;
            let int = intersection_of_class_maximal(g, &x, bounds)?;
            let ucs = upper_central_series(g, bounds)?.pop().unwrap();
            (x.name().to_string(), z, int, Some(ucs))
        }
        Check::Remark4 => {
            let x = ClassOfGroups::quasinilpotent();
            let z = hypercenter(g, &x, bounds)?.z;
            let inner = inner_induction_hypercenter(g, bounds)?;
            (x.name().to_string(), z, inner, None)
        }
        Check::CompareNca => {
            let x = ClassOfGroups::nca();
            let z = hypercenter(g, &x, bounds)?.z;
            let int = intersection_of_class_maximal(g, &x, bounds)?;
            (x.name().to_string(), z, int, None)
        }
    };
    let equal = z == int && ucs.as_ref().is_none_or(|u| *u == z);
    let z_le_int = z.is_subgroup_of(&int);
    let passed = match check {
        Check::Corollary | Check::Baer | Check::Remark4 => equal && (check == Check::Remark4 || z_le_int),
        Check::LemmaA => z_le_int,
        Check::CompareNca => true,
    };
    let witness = if z == int {
        Vec::new()
    } else {
        symmetric_difference(g, &z, &int, bounds)?
    };
    Ok(VerificationReport {
        check: check.name().to_string(),
        group_id: entry.id.clone(),
        order: g.order(),
        class,
        z_order: z.order(),
        int_order: int.order(),
        equal,
        ucs_order: ucs.as_ref().map(PermGroup::order),
        z_le_int,
        passed,
        z_generators: generator_strings(&z),
        int_generators: generator_strings(&int),
        witness,
        error: None,
        millis: None,
        error_code: None,
    })
}

/// Runs `check` over the corpus in parallel. Reports come back in corpus
/// order; per-group errors are recorded in the report. `f` is only used
/// by [`Check::Corollary`] and [`Check::LemmaA`].
pub fn verify(check: Check, corpus: &[CorpusEntry], f: &ClassOfGroups, bounds: &Bounds) -> Vec<VerificationReport> {
    corpus
        .par_iter()
        .map(|entry| {
            let start = Instant::now();
            let mut report = run_one(check, entry, f, bounds)
                .unwrap_or_else(|e| VerificationReport::failed(check.name(), entry, f.name(), e));
            report.millis = Some(start.elapsed().as_millis() as u64);
            report
        })
        .collect()
}

pub fn verify_theorem1(corpus: &[CorpusEntry], f: &ClassOfGroups, bounds: &Bounds) -> Vec<VerificationReport> {
    verify(Check::Corollary, corpus, f, bounds)
}

pub fn verify_baer(corpus: &[CorpusEntry], bounds: &Bounds) -> Vec<VerificationReport> {
    verify(Check::Baer, corpus, &ClassOfGroups::nilpotent(), bounds)
}

pub fn verify_remark4(corpus: &[CorpusEntry], bounds: &Bounds) -> Vec<VerificationReport> {
    verify(Check::Remark4, corpus, &ClassOfGroups::nilpotent(), bounds)
}

pub fn verify_lemma_a(corpus: &[CorpusEntry], f: &ClassOfGroups, bounds: &Bounds) -> Vec<VerificationReport> {
    verify(Check::LemmaA, corpus, f, bounds)
}

pub fn compare_nca(corpus: &[CorpusEntry], bounds: &Bounds) -> Vec<VerificationReport> {
    verify(Check::CompareNca, corpus, &ClassOfGroups::nilpotent(), bounds)
}
