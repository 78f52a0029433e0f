//! C ABI over the `quasihyper` engine.
//!
//! Every function returns a [`QhStatus`] and writes results through out
//! pointers. Handles (`QhGroup`, `QhClass`, `QhCorpus`) are opaque and
//! owned by the caller once returned; release them with the matching
//! `*_free`. Strings returned by the library are freed with
//! [`qh_string_free`]. After a non-`Ok` status, [`qh_last_error_message`]
//! describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use quasihyper::{
    builtin_corpus, formation, hypercenter, inner_induction_hypercenter, intersection_of_class_maximal, verify,
    Bounds, Check, ClassOfGroups, CorpusEntry, Error, Perm, PermGroup,
};

/// A permutation group.
pub struct QhGroup {
    inner: PermGroup,
}

/// A class of groups, made from a selector string.
pub struct QhClass {
    inner: ClassOfGroups,
}

/// A list of named groups.
pub struct QhCorpus {
    inner: Vec<CorpusEntry>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QhStatus {
    Ok = 0,
    VerificationFailed = 1,
    InputError = 2,
    ResourceBound = 3,
    Precondition = 4,
    NullPointer = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QhCheck {
    Corollary = 0,
    Baer = 1,
    Remark4 = 2,
    LemmaA = 3,
    CompareNca = 4,
}

/// Size limits; see [`qh_bounds_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QhBounds {
    pub enumeration: u64,
    pub lattice: u64,
    pub semidirect: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(QhStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Input(_) | Error::Parse { .. } => QhStatus::InputError,
            Error::Precondition(_) => QhStatus::Precondition,
            Error::BoundExceeded { .. } => QhStatus::ResourceBound,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(QhStatus::NullPointer, format!("{what} is null"))
}

fn set_error(msg: Option<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.map(|m| CString::new(m.replace('\0', " ")).unwrap()));
}

fn guard(f: impl FnOnce() -> Result<QhStatus, Failure>) -> QhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            if status == QhStatus::Ok {
                set_error(None);
            }
            status
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal panic".into());
            set_error(Some(msg));
            QhStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(QhStatus::InputError, format!("{what} is not UTF-8")))
}

unsafe fn bounds_from(b: *const QhBounds) -> Result<Bounds, Failure> {
    let bounds = match b.as_ref() {
        None => Bounds::default(),
        Some(b) => Bounds {
            enumeration: b.enumeration,
            lattice: b.lattice,
            semidirect: b.semidirect,
        },
    };
    bounds.validate()?;
    Ok(bounds)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap().into_raw()
}

fn new_group(g: PermGroup) -> *mut QhGroup {
    Box::into_raw(Box::new(QhGroup { inner: g }))
}

#[no_mangle]
pub extern "C" fn qh_bounds_default() -> QhBounds {
    let b = Bounds::default();
    QhBounds {
        enumeration: b.enumeration,
        lattice: b.lattice,
        semidirect: b.semidirect,
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn qh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a group from `n_gens` generators, each given as `degree` images
/// laid out consecutively in `images`.
///
/// # Safety
/// `images` must point to `n_gens * degree` readable values (it may be null
/// when `n_gens` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_group_from_generators(
    degree: usize,
    images: *const u32,
    n_gens: usize,
    out: *mut *mut QhGroup,
) -> QhStatus {
    guard(|| {
        if degree == 0 {
            return Err(Failure(QhStatus::InputError, "degree must be positive".into()));
        }
        let flat: &[u32] = if n_gens == 0 {
            &[]
        } else if images.is_null() {
            return Err(null("images"));
        } else {
            std::slice::from_raw_parts(images, n_gens * degree)
        };
        let gens = flat
            .chunks(degree)
            .map(|c| Perm::from_images(c.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        let g = PermGroup::new(degree, gens)?;
        write(out, new_group(g), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Parses group definition text (`degree N` then one cycle-notation
/// generator per line).
///
/// # Safety
/// `text_in` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_group_parse(text_in: *const c_char, out: *mut *mut QhGroup) -> QhStatus {
    guard(|| {
        let g = quasihyper::parse_group_file(text(text_in, "text")?)?;
        write(out, new_group(g), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qh_group_free(g: *mut QhGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_group_order(g: *const QhGroup, out: *mut u64) -> QhStatus {
    guard(|| {
        write(out, borrow(g, "group")?.inner.order(), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_group_degree(g: *const QhGroup, out: *mut usize) -> QhStatus {
    guard(|| {
        write(out, borrow(g, "group")?.inner.degree(), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Membership of the permutation with the given `degree` images.
///
/// # Safety
/// `g` must be a live handle, `images` must point to `degree` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_group_contains(
    g: *const QhGroup,
    images: *const u32,
    degree: usize,
    out: *mut bool,
) -> QhStatus {
    guard(|| {
        let g = borrow(g, "group")?;
        if images.is_null() {
            return Err(null("images"));
        }
        let p = Perm::from_images(std::slice::from_raw_parts(images, degree).to_vec())?;
        write(out, g.inner.contains(&p)?, "out")?;
        Ok(QhStatus::Ok)
    })
}

/// The group in definition-file format. Free with [`qh_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_group_emit(g: *const QhGroup, out: *mut *mut c_char) -> QhStatus {
    guard(|| {
        let s = quasihyper::emit_group_file(&borrow(g, "group")?.inner);
        write(out, into_c_string(s), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Selectors: `N`, `Np:<prime>`, `N*`, `Nca`, `abelian`, `all`.
///
/// # Safety
/// `selector` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_class_parse(selector: *const c_char, out: *mut *mut QhClass) -> QhStatus {
    guard(|| {
        let c = ClassOfGroups::parse(text(selector, "selector")?)?;
        write(out, Box::into_raw(Box::new(QhClass { inner: c })), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qh_class_free(c: *mut QhClass) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// Handles must be live; `bounds` may be null for the defaults; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_class_contains(
    c: *const QhClass,
    g: *const QhGroup,
    bounds: *const QhBounds,
    out: *mut bool,
) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        let member = borrow(c, "class")?.inner.contains(&borrow(g, "group")?.inner, &b)?;
        write(out, member, "out")?;
        Ok(QhStatus::Ok)
    })
}

/// `Z_X(G)` as a new group handle.
///
/// # Safety
/// Handles must be live; `bounds` may be null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_hypercenter(
    g: *const QhGroup,
    c: *const QhClass,
    bounds: *const QhBounds,
    out: *mut *mut QhGroup,
) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        let z = hypercenter(&borrow(g, "group")?.inner, &borrow(c, "class")?.inner, &b)?.z;
        write(out, new_group(z), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Intersection of the `X`-maximal subgroups, as a new group handle.
///
/// # Safety
/// Handles must be live; `bounds` may be null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_intersection(
    g: *const QhGroup,
    c: *const QhClass,
    bounds: *const QhBounds,
    out: *mut *mut QhGroup,
) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        let int = intersection_of_class_maximal(&borrow(g, "group")?.inner, &borrow(c, "class")?.inner, &b)?;
        write(out, new_group(int), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `g` must be live; `bounds` may be null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_inner_induction_hypercenter(
    g: *const QhGroup,
    bounds: *const QhBounds,
    out: *mut *mut QhGroup,
) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        let z = inner_induction_hypercenter(&borrow(g, "group")?.inner, &b)?;
        write(out, new_group(z), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_is_nilpotent(g: *const QhGroup, out: *mut bool) -> QhStatus {
    guard(|| {
        write(out, formation::is_nilpotent(&borrow(g, "group")?.inner), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `g` must be live; `bounds` may be null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_is_quasinilpotent(g: *const QhGroup, bounds: *const QhBounds, out: *mut bool) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        write(out, formation::is_quasinilpotent(&borrow(g, "group")?.inner, &b)?, "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `g` must be live; `bounds` may be null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_is_nca_member(g: *const QhGroup, bounds: *const QhBounds, out: *mut bool) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        write(out, formation::is_nca_member(&borrow(g, "group")?.inner, &b)?, "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Built-in corpus: `smoke`, `standard` or `extended`.
///
/// # Safety
/// `name` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_corpus_builtin(name: *const c_char, out: *mut *mut QhCorpus) -> QhStatus {
    guard(|| {
        let c = builtin_corpus(text(name, "name")?)?;
        write(out, Box::into_raw(Box::new(QhCorpus { inner: c })), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qh_corpus_free(c: *mut QhCorpus) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_corpus_len(c: *const QhCorpus, out: *mut usize) -> QhStatus {
    guard(|| {
        write(out, borrow(c, "corpus")?.inner.len(), "out")?;
        Ok(QhStatus::Ok)
    })
}

unsafe fn corpus_entry<'a>(c: *const QhCorpus, index: usize) -> Result<&'a CorpusEntry, Failure> {
    let c = borrow(c, "corpus")?;
    c.inner.get(index).ok_or_else(|| {
        Failure(
            QhStatus::InputError,
            format!("index {index} out of range for corpus of {}", c.inner.len()),
        )
    })
}

/// A new handle for the `index`-th group.
///
/// # Safety
/// `c` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_corpus_group(c: *const QhCorpus, index: usize, out: *mut *mut QhGroup) -> QhStatus {
    guard(|| {
        let g = corpus_entry(c, index)?.group.clone();
        write(out, new_group(g), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Id of the `index`-th group. Free with [`qh_string_free`].
///
/// # Safety
/// `c` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_corpus_id(c: *const QhCorpus, index: usize, out: *mut *mut c_char) -> QhStatus {
    guard(|| {
        let id = corpus_entry(c, index)?.id.clone();
        write(out, into_c_string(id), "out")?;
        Ok(QhStatus::Ok)
    })
}

/// Runs a verification check over the corpus and writes the reports as
/// JSON lines (free with [`qh_string_free`]). `f_class` picks `F` for the
/// corollary and containment checks and may be null for `N`.
///
/// A group that could not be computed makes the status `ResourceBound`
/// (or `InputError`); otherwise a failed check gives `VerificationFailed`.
/// The reports are written either way.
///
/// # Safety
/// `corpus` must be live; `f_class` and `bounds` may be null; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn qh_verify(
    check: QhCheck,
    corpus: *const QhCorpus,
    f_class: *const QhClass,
    bounds: *const QhBounds,
    out: *mut *mut c_char,
) -> QhStatus {
    guard(|| {
        let b = bounds_from(bounds)?;
        let corpus = borrow(corpus, "corpus")?;
        let f = f_class.as_ref().map_or_else(ClassOfGroups::nilpotent, |c| c.inner.clone());
        let check = match check {
            QhCheck::Corollary => Check::Corollary,
            QhCheck::Baer => Check::Baer,
            QhCheck::Remark4 => Check::Remark4,
            QhCheck::LemmaA => Check::LemmaA,
            QhCheck::CompareNca => Check::CompareNca,
        };
        let reports = verify(check, &corpus.inner, &f, &b);
        if out.is_null() {
            return Err(null("out"));
        }
        let mut jsonl = String::new();
        for r in &reports {
            jsonl.push_str(&r.to_json());
            jsonl.push('\n');
        }
        out.write(into_c_string(jsonl));
        if let Some(r) = reports.iter().find(|r| r.error.is_some()) {
            let status = if r.error_code == Some(3) {
                QhStatus::ResourceBound
            } else {
                QhStatus::InputError
            };
            return Err(Failure(
                status,
                format!("{}: {}", r.group_id, r.error.as_deref().unwrap()),
            ));
        }
        if let Some(r) = reports.iter().find(|r| !r.passed) {
            return Err(Failure(
                QhStatus::VerificationFailed,
                format!("{} check failed on {}", r.check, r.group_id),
            ));
        }
        Ok(QhStatus::Ok)
    })
}
