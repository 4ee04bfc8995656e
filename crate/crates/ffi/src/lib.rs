//! C interface to `baxter-hopf`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`BaxStatus`]; on failure `bax_last_error` describes the problem for the
//! calling thread. Strings returned through `char **` are released with
//! [`bax_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use baxter_hopf::enumerate::{self, ENUM_LIMIT};
use baxter_hopf::error::check_size;
use baxter_hopf::hopf::{element_json, tensor_json, Bax, DRec, FreeElement, GradedHopf, TBax, MR};
use baxter_hopf::{baxter_number, is_baxter, is_twisted_baxter, rho, DiagonalRectangulation, Error, Permutation};

/// Largest total degree accepted by the intrinsic rectangulation product.
const DREC_PRODUCT_LIMIT: usize = 8;
const COPRODUCT_LIMIT: usize = 12;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    ResourceLimit = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaxKind {
    Perm = 0,
    TwistedBaxter = 1,
    Baxter = 2,
    Rectangulation = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaxAlgebra {
    MalvenutoReutenauer = 0,
    TwistedBaxter = 1,
    Baxter = 2,
    Rectangulation = 3,
}

/// Opaque permutation handle.
pub struct BaxPermutation(Permutation);

/// Opaque diagonal rectangulation handle.
pub struct BaxRectangulation(DiagonalRectangulation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(BaxStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidInput(_) => BaxStatus::InvalidInput,
            Error::ResourceLimit { .. } => BaxStatus::ResourceLimit,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BaxStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f` behind a panic guard and records any failure.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BaxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            BaxStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BaxStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(BaxStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Fail(BaxStatus::InvalidInput, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn perm_ref<'a>(p: *const BaxPermutation) -> Result<&'a Permutation, Fail> {
    p.as_ref().map(|b| &b.0).ok_or_else(|| null("permutation"))
}

unsafe fn rect_ref<'a>(r: *const BaxRectangulation) -> Result<&'a DiagonalRectangulation, Fail> {
    r.as_ref().map(|b| &b.0).ok_or_else(|| null("rectangulation"))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn bax_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn bax_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"2413"`, `"2,4,1,3"` or `"[2,4,1,3]"`.
///
/// # Safety
/// `s` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_perm_parse(s: *const c_char, out: *mut *mut BaxPermutation) -> BaxStatus {
    guard(|| {
        let p: Permutation = read_str(s, "input")?.parse()?;
        write_out(out, BaxPermutation(p))
    })
}

/// # Safety
/// `p` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn bax_perm_free(p: *mut BaxPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Size of `p`, or 0 when `p` is null.
///
/// # Safety
/// `p` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bax_perm_len(p: *const BaxPermutation) -> usize {
    p.as_ref().map_or(0, |b| b.0.len())
}

/// One-line word form, comma separated once `n > 9`; `∅` when empty.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_perm_to_string(p: *const BaxPermutation, out: *mut *mut c_char) -> BaxStatus {
    guard(|| write_string(out, perm_ref(p)?.to_string()))
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_perm_is_baxter(p: *const BaxPermutation, out: *mut bool) -> BaxStatus {
    guard(|| {
        let v = is_baxter(perm_ref(p)?);
        out.as_mut().map(|o| *o = v).ok_or_else(|| null("out"))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_perm_is_twisted_baxter(p: *const BaxPermutation, out: *mut bool) -> BaxStatus {
    guard(|| {
        let v = is_twisted_baxter(perm_ref(p)?);
        out.as_mut().map(|o| *o = v).ok_or_else(|| null("out"))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_rho(p: *const BaxPermutation, out: *mut *mut BaxRectangulation) -> BaxStatus {
    guard(|| write_out(out, BaxRectangulation(rho(perm_ref(p)?))))
}

/// Parses `{"n": .., "rects": [[x1, y1, x2, y2], ..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_rect_parse(json: *const c_char, out: *mut *mut BaxRectangulation) -> BaxStatus {
    guard(|| {
        let r: DiagonalRectangulation = read_str(json, "input")?.parse()?;
        write_out(out, BaxRectangulation(r))
    })
}

/// # Safety
/// `r` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn bax_rect_free(r: *mut BaxRectangulation) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_rect_to_json(r: *const BaxRectangulation, out: *mut *mut c_char) -> BaxStatus {
    guard(|| write_string(out, rect_ref(r)?.to_string()))
}

/// The twisted Baxter permutation `τ(r)`.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_tau(r: *const BaxRectangulation, out: *mut *mut BaxPermutation) -> BaxStatus {
    guard(|| write_out(out, BaxPermutation(rect_ref(r)?.tau())))
}

/// The Baxter permutation `β(r)`.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_beta(r: *const BaxRectangulation, out: *mut *mut BaxPermutation) -> BaxStatus {
    guard(|| write_out(out, BaxPermutation(rect_ref(r)?.beta())))
}

/// `B(n)` in decimal; exact for every `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_baxter_number(n: usize, out: *mut *mut c_char) -> BaxStatus {
    guard(|| write_string(out, baxter_number(n).to_string()))
}

/// Counts objects of size `n` by enumeration.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_count(kind: BaxKind, n: usize, out: *mut u64) -> BaxStatus {
    guard(|| {
        let c = match kind {
            BaxKind::Perm => {
                check_size("count", n, 20)?;
                (1..=n as u64).product()
            }
            BaxKind::TwistedBaxter => enumerate::tbax(n)?.len() as u64,
            BaxKind::Baxter => enumerate::bax(n)?.len() as u64,
            BaxKind::Rectangulation => enumerate::drec(n)?.len() as u64,
        };
        out.as_mut().map(|o| *o = c).ok_or_else(|| null("out"))
    })
}

fn perm_algebra(a: BaxAlgebra) -> Option<&'static dyn GradedHopf<Key = Permutation>> {
    match a {
        BaxAlgebra::MalvenutoReutenauer => Some(&MR),
        BaxAlgebra::TwistedBaxter => Some(&TBax),
        BaxAlgebra::Baxter => Some(&Bax),
        BaxAlgebra::Rectangulation => None,
    }
}

/// Rectangulation JSON, or a permutation standing for its `ρ` image.
fn parse_rect(s: &str) -> Result<DiagonalRectangulation, Fail> {
    if s.trim_start().starts_with('{') {
        Ok(s.parse()?)
    } else {
        Ok(rho(&s.parse()?))
    }
}

/// Product of two basis elements as a JSON list of `{"key", "coeff"}`.
/// Rectangulation inputs may be JSON or permutations (read through `ρ`).
///
/// # Safety
/// `a` and `b` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_product_json(
    algebra: BaxAlgebra,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> BaxStatus {
    guard(|| {
        let (a, b) = (read_str(a, "a")?, read_str(b, "b")?);
        let json = match perm_algebra(algebra) {
            Some(h) => {
                let (x, y): (Permutation, Permutation) = (a.parse()?, b.parse()?);
                check_size("product", x.len() + y.len(), ENUM_LIMIT)?;
                element_json(&h.product(&FreeElement::basis(x), &FreeElement::basis(y))?)
            }
            None => {
                let (x, y) = (parse_rect(a)?, parse_rect(b)?);
                check_size("product", x.n() + y.n(), DREC_PRODUCT_LIMIT)?;
                element_json(&DRec::INTRINSIC.product(&FreeElement::basis(x), &FreeElement::basis(y))?)
            }
        };
        write_string(out, json.to_string())
    })
}

/// Coproduct of a basis element as a JSON list of `{"left", "right", "coeff"}`.
///
/// # Safety
/// `a` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bax_coproduct_json(algebra: BaxAlgebra, a: *const c_char, out: *mut *mut c_char) -> BaxStatus {
    guard(|| {
        let a = read_str(a, "a")?;
        let json = match perm_algebra(algebra) {
            Some(h) => {
                let x: Permutation = a.parse()?;
                check_size("coproduct", x.len(), COPRODUCT_LIMIT)?;
                tensor_json(&h.coproduct(&FreeElement::basis(x))?)
            }
            None => {
                let x = parse_rect(a)?;
                check_size("coproduct", x.n(), DREC_PRODUCT_LIMIT)?;
                tensor_json(&DRec::INTRINSIC.coproduct(&FreeElement::basis(x))?)
            }
        };
        write_string(out, json.to_string())
    })
}
