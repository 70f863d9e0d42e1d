//! C ABI over `fgtool`.
//!
//! Objects are opaque handles created by `fg_*_parse` or by a computation
//! and released with the matching `fg_*_free`. Every fallible call returns
//! an [`FgStatus`]; on failure `fg_last_error_message` describes the error
//! for the calling thread. Strings handed out by the library must be
//! released with `fg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fgtool::algebra::{h1_cohomology_dim, h1_integral, hh1_dimension, FieldSpec};
use fgtool::cli::{parse_input, serialize_complex, serialize_poset, serialize_presentation, serialize_quiver};
use fgtool::combinatorics::{barycentric, hasse_quiver, Poset, Quiver, SimplicialComplex};
use fgtool::groups::{invariant_suite, Presentation};
use fgtool::pi1::{edge_path_presentation, quiver_pi1_presentation, van_kampen_assemble};
use fgtool::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Input text does not follow the line grammar.
    Parse = 3,
    /// Well-formed input that violates a structural requirement.
    Invalid = 4,
    Disconnected = 5,
    /// Unknown basepoint or a characteristic that is not 0 or prime.
    BadArgument = 6,
    /// A hom count would exceed the budget.
    Budget = 7,
    /// Buffer passed by the caller is too small; the needed length is
    /// still reported.
    BufferTooSmall = 8,
    Panic = 9,
}

pub struct FgComplex(SimplicialComplex);
pub struct FgPoset(Poset);
pub struct FgQuiver(Quiver);
pub struct FgPresentation(Presentation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> FgStatus {
    match e {
        Error::Syntax { .. } | Error::DuplicateId { .. } | Error::UnknownLabel { .. } | Error::EmptyInput(_) | Error::Io(_) => {
            FgStatus::Parse
        }
        Error::Disconnected | Error::DisconnectedPiece(_) => FgStatus::Disconnected,
        Error::UnknownBasepoint(_) | Error::BadBasepoint(_) | Error::NonPrimeCharacteristic(_) => {
            FgStatus::BadArgument
        }
        Error::TargetTooLarge { .. } => FgStatus::Budget,
        _ => FgStatus::Invalid,
    }
}

struct Fail(FgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn run(f: impl FnOnce() -> Result<(), Fail>) -> FgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FgStatus::Panic
        }
    }
}

unsafe fn obj<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(FgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(FgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(FgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn optional_text<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(FgStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(value)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(FgStatus::Invalid, "string contains a nul byte".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_list(values: &[u64], buf: *mut u64, cap: usize, len: *mut usize) -> Result<(), Fail> {
    put(len, values.len())?;
    if values.len() > cap {
        return Err(Fail(FgStatus::BufferTooSmall, format!("need room for {} entries", values.len())));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(Fail(FgStatus::NullPointer, "buffer is null".into()));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

fn field(characteristic: u64) -> Result<FieldSpec, Fail> {
    Ok(FieldSpec::new(characteristic)?)
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn fg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fg_complex_parse(text_in: *const c_char, close_down: bool, out: *mut *mut FgComplex) -> FgStatus {
    run(|| {
        let doc = parse_input(text(text_in, "text")?)?;
        put_box(out, FgComplex(doc.to_complex(close_down)?))
    })
}

/// # Safety
/// `c` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fg_complex_free(c: *mut FgComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Canonical text form of the complex.
///
/// # Safety
/// Pointers must be valid; the string is freed with `fg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fg_complex_to_string(c: *const FgComplex, out: *mut *mut c_char) -> FgStatus {
    run(|| put_string(out, serialize_complex(&obj(c, "complex")?.0)))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_complex_barycentric(c: *const FgComplex, out: *mut *mut FgComplex) -> FgStatus {
    run(|| put_box(out, FgComplex(barycentric(&obj(c, "complex")?.0))))
}

/// Edge-path group. A null `basepoint` picks the least vertex.
///
/// # Safety
/// Pointers must be valid; `basepoint` may be null.
#[no_mangle]
pub unsafe extern "C" fn fg_complex_pi1(
    c: *const FgComplex,
    basepoint: *const c_char,
    out: *mut *mut FgPresentation,
) -> FgStatus {
    run(|| {
        let c = &obj(c, "complex")?.0;
        let first = c.vertices().first().expect("complexes are non-empty").clone();
        let b = optional_text(basepoint, "basepoint")?.unwrap_or(&first);
        put_box(out, FgPresentation(edge_path_presentation(c, b)?))
    })
}

/// `H₁(C, ℤ)`: free rank and torsion coefficients. `torsion_len` always
/// receives the number of coefficients.
///
/// # Safety
/// `torsion` must have room for `cap` values (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn fg_complex_h1(
    c: *const FgComplex,
    rank: *mut usize,
    torsion: *mut u64,
    cap: usize,
    torsion_len: *mut usize,
) -> FgStatus {
    run(|| {
        let (r, t) = h1_integral(&obj(c, "complex")?.0)?;
        put(rank, r)?;
        put_list(&t, torsion, cap, torsion_len)
    })
}

/// `dim H¹(C, k)` for `k` of the given characteristic (0 or prime).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_complex_h1_dim(c: *const FgComplex, characteristic: u64, out: *mut usize) -> FgStatus {
    run(|| {
        let c = &obj(c, "complex")?.0;
        if !c.is_connected() {
            return Err(Error::Disconnected.into());
        }
        put(out, h1_cohomology_dim(c, field(characteristic)?))
    })
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fg_poset_parse(text_in: *const c_char, out: *mut *mut FgPoset) -> FgStatus {
    run(|| {
        let doc = parse_input(text(text_in, "text")?)?;
        put_box(out, FgPoset(doc.to_poset()?))
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fg_poset_free(p: *mut FgPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// Pointers must be valid; the string is freed with `fg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fg_poset_to_string(p: *const FgPoset, out: *mut *mut c_char) -> FgStatus {
    run(|| put_string(out, serialize_poset(&obj(p, "poset")?.0)))
}

/// Hasse quiver of the poset.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_poset_hasse(p: *const FgPoset, out: *mut *mut FgQuiver) -> FgStatus {
    run(|| put_box(out, FgQuiver(hasse_quiver(&obj(p, "poset")?.0).into_inner())))
}

/// `Π₁` of the Hasse quiver, based at the least element.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_poset_pi1(p: *const FgPoset, out: *mut *mut FgPresentation) -> FgStatus {
    run(|| {
        let p = &obj(p, "poset")?.0;
        let q = hasse_quiver(p);
        put_box(out, FgPresentation(quiver_pi1_presentation(q.quiver(), &p.elements()[0])?))
    })
}

/// `dim HH¹` of the incidence algebra over a field of the given
/// characteristic.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_poset_hh1(p: *const FgPoset, characteristic: u64, out: *mut usize) -> FgStatus {
    run(|| put(out, hh1_dimension(&obj(p, "poset")?.0, field(characteristic)?)?))
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fg_quiver_parse(text_in: *const c_char, out: *mut *mut FgQuiver) -> FgStatus {
    run(|| {
        let doc = parse_input(text(text_in, "text")?)?;
        put_box(out, FgQuiver(doc.to_quiver()?))
    })
}

/// # Safety
/// `q` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fg_quiver_free(q: *mut FgQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// # Safety
/// Pointers must be valid; the string is freed with `fg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fg_quiver_to_string(q: *const FgQuiver, out: *mut *mut c_char) -> FgStatus {
    run(|| put_string(out, serialize_quiver(&obj(q, "quiver")?.0)))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_quiver_complete(q: *const FgQuiver, out: *mut *mut FgQuiver) -> FgStatus {
    run(|| put_box(out, FgQuiver(obj(q, "quiver")?.0.complete()?)))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_quiver_order(q: *const FgQuiver, out: *mut *mut FgQuiver) -> FgStatus {
    run(|| put_box(out, FgQuiver(obj(q, "quiver")?.0.order()?.into_inner())))
}

/// `Π₁(Q, I_Q)`. A null `basepoint` picks the least vertex.
///
/// # Safety
/// Pointers must be valid; `basepoint` may be null.
#[no_mangle]
pub unsafe extern "C" fn fg_quiver_pi1(
    q: *const FgQuiver,
    basepoint: *const c_char,
    out: *mut *mut FgPresentation,
) -> FgStatus {
    run(|| {
        let q = &obj(q, "quiver")?.0;
        let first = q.vertices().first().expect("quivers are non-empty").clone();
        let b = optional_text(basepoint, "basepoint")?.unwrap_or(&first);
        put_box(out, FgPresentation(quiver_pi1_presentation(q, b)?))
    })
}

/// Van Kampen assembly of `Π₁(Q)` from pieces `q1`, `q2`.
///
/// # Safety
/// Pointers must be valid; `basepoint` may be null.
#[no_mangle]
pub unsafe extern "C" fn fg_van_kampen(
    q: *const FgQuiver,
    q1: *const FgQuiver,
    q2: *const FgQuiver,
    basepoint: *const c_char,
    out: *mut *mut FgPresentation,
) -> FgStatus {
    run(|| {
        let vk = van_kampen_assemble(
            &obj(q, "q")?.0,
            &obj(q1, "q1")?.0,
            &obj(q2, "q2")?.0,
            optional_text(basepoint, "basepoint")?,
        )?;
        put_box(out, FgPresentation(vk.presentation().clone()))
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fg_presentation_free(p: *mut FgPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn fg_presentation_num_generators(p: *const FgPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.0.num_generators())
}

/// # Safety
/// `p` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn fg_presentation_num_relators(p: *const FgPresentation) -> usize {
    p.as_ref().map_or(0, |p| p.0.relators().len())
}

/// Tietze-simplified copy.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fg_presentation_simplify(p: *const FgPresentation, out: *mut *mut FgPresentation) -> FgStatus {
    run(|| put_box(out, FgPresentation(obj(p, "presentation")?.0.simplify())))
}

/// Abelianization: free rank and torsion coefficients.
///
/// # Safety
/// `torsion` must have room for `cap` values (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn fg_presentation_abelianization(
    p: *const FgPresentation,
    rank: *mut usize,
    torsion: *mut u64,
    cap: usize,
    torsion_len: *mut usize,
) -> FgStatus {
    run(|| {
        let (r, t) = obj(p, "presentation")?.0.abelianization();
        put(rank, r)?;
        put_list(&t, torsion, cap, torsion_len)
    })
}

/// `gens:` / `rel:` lines, followed by the invariant block when
/// `with_invariants` is set.
///
/// # Safety
/// Pointers must be valid; the string is freed with `fg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn fg_presentation_to_string(
    p: *const FgPresentation,
    with_invariants: bool,
    out: *mut *mut c_char,
) -> FgStatus {
    run(|| {
        let p = &obj(p, "presentation")?.0;
        let report = if with_invariants { Some(invariant_suite(p)?) } else { None };
        put_string(out, serialize_presentation(p, report.as_ref()))
    })
}
