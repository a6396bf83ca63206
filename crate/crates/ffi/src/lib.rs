//! C ABI over the groupcover engine.
//!
//! Groups are opaque `GcGroup` handles created by the `gc_group_from_*`
//! constructors and released with `gc_group_free`. Every call returns a
//! `GcStatus`; on failure `gc_last_error_message` describes the error on the
//! calling thread. Results are written through out-pointers.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::sync::OnceLock;

use groupcover::covering::{sigma_classifier, SigmaValue};
use groupcover::io::parse_group_json;
use groupcover::union_max::{mu_k, star_bound_designated};
use groupcover::{all_subgroups, are_isomorphic, make, sigma_exact, Error, Group, Rational, Sigma, SubgroupLattice};

/// Status code returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    NotAGroup = 3,
    ClosureExceedsLimit = 4,
    LatticeExceedsLimit = 5,
    UnknownSpec = 6,
    InvalidArgument = 7,
    ClauseMismatch = 8,
    Parse = 9,
    Panic = 10,
}

/// Covering number predicted by the quotient classifier.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcSigmaClass {
    Uncoverable = 0,
    Three = 3,
    Four = 4,
    Five = 5,
    Six = 6,
    OtherOrUnknown = 255,
}

/// Opaque group handle. The subgroup lattice is built on first use.
pub struct GcGroup {
    group: Group,
    lattice: OnceLock<SubgroupLattice>,
}

impl GcGroup {
    fn new(group: Group) -> Self {
        GcGroup {
            group,
            lattice: OnceLock::new(),
        }
    }

    fn lattice(&self) -> Result<&SubgroupLattice, Error> {
        if let Some(lattice) = self.lattice.get() {
            return Ok(lattice);
        }
        let built = all_subgroups(&self.group)?;
        Ok(self.lattice.get_or_init(|| built))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn status_of(err: &Error) -> GcStatus {
    match err {
        Error::NotAGroup { .. } => GcStatus::NotAGroup,
        Error::ClosureExceedsLimit { .. } => GcStatus::ClosureExceedsLimit,
        Error::LatticeExceedsLimit { .. } => GcStatus::LatticeExceedsLimit,
        Error::UnknownSpec(_) => GcStatus::UnknownSpec,
        Error::ClauseMismatch { .. } => GcStatus::ClauseMismatch,
        Error::GroupFile { .. } | Error::Io(_) => GcStatus::Parse,
        Error::NotNormal | Error::InvalidPermutation(_) => GcStatus::InvalidArgument,
    }
}

struct Failure(GcStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status and the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> GcStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|panic| {
        let message = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".to_string());
        Err(Failure(GcStatus::Panic, message))
    });
    match outcome {
        Ok(()) => {
            set_last_error("");
            GcStatus::Ok
        }
        Err(Failure(status, message)) => {
            set_last_error(&message);
            status
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(GcStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a>(g: *const GcGroup) -> Result<&'a GcGroup, Failure> {
    g.as_ref().ok_or_else(|| null("group"))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit(out: *mut *mut GcGroup, group: Group) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(GcGroup::new(group))), "out")
}

/// Builds a group from a spec such as `"S3"`, `"C2xC2"` or `"F20"`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_from_spec(spec: *const c_char, out: *mut *mut GcGroup) -> GcStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        emit(out, make(spec)?)
    })
}

/// Builds a group from a row-major `order × order` Cayley table of element indices.
///
/// # Safety
/// `table` must point to `order * order` readable values and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_from_table(table: *const usize, order: usize, out: *mut *mut GcGroup) -> GcStatus {
    guard(|| {
        if table.is_null() {
            return Err(null("table"));
        }
        let cells = order
            .checked_mul(order)
            .ok_or_else(|| Failure(GcStatus::InvalidArgument, format!("order {order} too large")))?;
        let flat = std::slice::from_raw_parts(table, cells);
        let rows: Vec<Vec<usize>> = flat.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
        emit(out, Group::from_cayley_table("table", &rows)?)
    })
}

/// Builds a group from the JSON group-file format (`kind` `"cayley"` or `"perm"`).
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_from_json(json: *const c_char, out: *mut *mut GcGroup) -> GcStatus {
    guard(|| {
        let json = text(json, "json")?;
        emit(out, parse_group_json(json, Path::new("<ffi>"))?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle from a `gc_group_from_*` call that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn gc_group_free(g: *mut GcGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_order(g: *const GcGroup, out: *mut usize) -> GcStatus {
    guard(|| write(out, handle(g)?.group.order(), "out"))
}

/// Number of subgroups, including the trivial subgroup and the group itself.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_subgroup_count(g: *const GcGroup, out: *mut usize) -> GcStatus {
    guard(|| write(out, handle(g)?.lattice()?.len(), "out"))
}

/// Exact covering number; writes 0 when the group is not a union of proper subgroups.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_sigma(g: *const GcGroup, out: *mut usize) -> GcStatus {
    guard(|| {
        let h = handle(g)?;
        let sigma = if h.group.order() > 1 {
            sigma_exact(&h.group, h.lattice()?).sigma
        } else {
            Sigma::Uncoverable
        };
        write(out, sigma.value().unwrap_or(0), "out")
    })
}

/// Largest union of `k` distinct proper subgroups, as a size and a reduced fraction of the order.
///
/// # Safety
/// `g` must be a live handle and the out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn gc_group_mu(
    g: *const GcGroup,
    k: usize,
    union_size: *mut usize,
    numer: *mut i64,
    denom: *mut i64,
) -> GcStatus {
    guard(|| {
        if k == 0 {
            return Err(Failure(GcStatus::InvalidArgument, "k must be at least 1".into()));
        }
        let h = handle(g)?;
        if union_size.is_null() || numer.is_null() || denom.is_null() {
            return Err(null("out"));
        }
        let witness = mu_k(&h.group, h.lattice()?, k);
        write(union_size, witness.union_size, "union_size")?;
        write(numer, *witness.ratio.numer(), "numer")?;
        write(denom, *witness.ratio.denom(), "denom")
    })
}

/// Covering number predicted by the quotient classifier.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_group_classify(g: *const GcGroup, out: *mut GcSigmaClass) -> GcStatus {
    guard(|| {
        let h = handle(g)?;
        let class = match sigma_classifier(&h.group, h.lattice()?)?.value {
            SigmaValue::Uncoverable => GcSigmaClass::Uncoverable,
            SigmaValue::Three => GcSigmaClass::Three,
            SigmaValue::Four => GcSigmaClass::Four,
            SigmaValue::Five => GcSigmaClass::Five,
            SigmaValue::Six => GcSigmaClass::Six,
            SigmaValue::OtherOrUnknown => GcSigmaClass::OtherOrUnknown,
        };
        write(out, class, "out")
    })
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_are_isomorphic(a: *const GcGroup, b: *const GcGroup, out: *mut bool) -> GcStatus {
    guard(|| write(out, are_isomorphic(&handle(a)?.group, &handle(b)?.group), "out"))
}

/// `Σ n_i − n_d · Σ_{i≠d} n_i` for the ratios `numers[i] / denoms[i]`.
///
/// # Safety
/// `numers` and `denoms` must point to `len` readable values and the out-pointers be valid.
#[no_mangle]
pub unsafe extern "C" fn gc_star_bound(
    numers: *const i64,
    denoms: *const i64,
    len: usize,
    designated: usize,
    numer: *mut i64,
    denom: *mut i64,
) -> GcStatus {
    guard(|| {
        if numers.is_null() || denoms.is_null() {
            return Err(null("ratios"));
        }
        if designated >= len {
            return Err(Failure(
                GcStatus::InvalidArgument,
                format!("designated index {designated} out of range for {len} ratios"),
            ));
        }
        let numers = std::slice::from_raw_parts(numers, len);
        let denoms = std::slice::from_raw_parts(denoms, len);
        if denoms.contains(&0) {
            return Err(Failure(GcStatus::InvalidArgument, "zero denominator".into()));
        }
        let ratios: Vec<Rational> = numers.iter().zip(denoms).map(|(&n, &d)| Rational::new(n, d)).collect();
        let bound = star_bound_designated(&ratios, designated);
        write(numer, *bound.numer(), "numer")?;
        write(denom, *bound.denom(), "denom")
    })
}

/// Message for the last failed call on this thread, or an empty string after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}
