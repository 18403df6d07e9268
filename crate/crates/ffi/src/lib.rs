//! C ABI over `hankel-zeta`.
//!
//! Every fallible call returns an [`HzStatus`] and writes results through
//! out-pointers. On failure, [`hz_last_error_message`] returns a description
//! of the most recent error on the calling thread. Handles are opaque and
//! must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hankel_zeta::identity::{
    exp_tr_det_auto, normalization_constant, scalar_det_side, theorem_residual, MatrixOperand, PhaseBranch,
};
use hankel_zeta::mellin::{ContourSpec, QuadOptions};
use hankel_zeta::special::BranchConvention;
use hankel_zeta::spectrum::Spectrum;
use hankel_zeta::zeta::{
    count_zeros_rectangle, eta_hankel, eta_series, find_zeros, functional_equation_residual, zeta_hankel,
    zeta_ref, NearIntegerPolicy, ZeroRecord,
};
use hankel_zeta::{Complex64, Error};
use nalgebra::DMatrix;

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Pole = 3,
    Domain = 4,
    Config = 5,
    Accuracy = 6,
    Conditioning = 7,
    NearInteger = 8,
    BoundaryZero = 9,
    PhaseTracking = 10,
    Overflow = 11,
    Panic = 12,
}

impl From<&Error> for HzStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Pole { .. } => HzStatus::Pole,
            Error::Domain(_) => HzStatus::Domain,
            Error::Config(_) => HzStatus::Config,
            Error::Accuracy { .. } => HzStatus::Accuracy,
            Error::Conditioning { .. } => HzStatus::Conditioning,
            Error::NearInteger { .. } => HzStatus::NearInteger,
            Error::BoundaryZero { .. } => HzStatus::BoundaryZero,
            Error::PhaseTracking { .. } => HzStatus::PhaseTracking,
            Error::Overflow(_) => HzStatus::Overflow,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HzComplex {
    pub re: f64,
    pub im: f64,
}

impl From<HzComplex> for Complex64 {
    fn from(z: HzComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for HzComplex {
    fn from(z: Complex64) -> Self {
        HzComplex { re: z.re, im: z.im }
    }
}

/// A computed value with its error estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HzValue {
    pub value: HzComplex,
    pub err_estimate: f64,
    /// Number of warnings attached to the computation.
    pub warning_count: u32,
}

/// Treatment of contour evaluations within 1e-2 of a positive integer.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzNearInteger {
    Ring = 0,
    Fallback = 1,
    Reject = 2,
}

impl From<HzNearInteger> for NearIntegerPolicy {
    fn from(p: HzNearInteger) -> Self {
        match p {
            HzNearInteger::Ring => NearIntegerPolicy::Ring,
            HzNearInteger::Fallback => NearIntegerPolicy::Fallback,
            HzNearInteger::Reject => NearIntegerPolicy::Reject,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HzBranch {
    Symmetric = 0,
    ZeroTwoPi = 1,
}

/// Hankel contour settings.
pub struct HzContour(ContourSpec);

/// Positive operator spectrum.
pub struct HzSpectrum(Spectrum);

/// Critical-line zeros found by [`hz_find_zeros`].
pub struct HzZeroList(Vec<ZeroRecord>);

/// One entry of an [`HzZeroList`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HzZero {
    pub t: f64,
    pub residual: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub winding_confirmed: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Vec<u8>> = const { RefCell::new(Vec::new()) };
}

fn set_last_error(msg: &str) {
    LAST_ERROR.with(|e| {
        let mut buf = e.borrow_mut();
        buf.clear();
        buf.extend(msg.bytes().filter(|b| *b != 0));
    });
}

fn fail(status: HzStatus, msg: &str) -> HzStatus {
    set_last_error(msg);
    status
}

/// Run `body`, mapping library errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), HzStatus>) -> HzStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            HzStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(HzStatus::Panic, &msg)
        }
    }
}

trait Checked<T> {
    fn checked(self) -> Result<T, HzStatus>;
}

impl<T> Checked<T> for hankel_zeta::Result<T> {
    fn checked(self) -> Result<T, HzStatus> {
        self.map_err(|e| fail(HzStatus::from(&e), &e.to_string()))
    }
}

fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, HzStatus> {
    // SAFETY: callers pass either null or a valid, writable pointer.
    unsafe { p.as_mut() }.ok_or_else(|| fail(HzStatus::NullPointer, &format!("{name} is null")))
}

fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, HzStatus> {
    // SAFETY: callers pass either null or a handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| fail(HzStatus::NullPointer, &format!("{name} is null")))
}

fn contour_or_default(p: *const HzContour) -> ContourSpec {
    // SAFETY: null selects the default; otherwise a live handle.
    unsafe { p.as_ref() }.map(|c| c.0).unwrap_or_default()
}

fn value_out(q: hankel_zeta::quad::QuadratureResult) -> HzValue {
    HzValue {
        value: q.value.into(),
        err_estimate: q.err_estimate,
        warning_count: q.warnings.len() as u32,
    }
}

fn into_handle<T>(slot: *mut *mut T, value: T) -> Result<(), HzStatus> {
    *out(slot, "out")? = Box::into_raw(Box::new(value));
    Ok(())
}

/// Free a handle allocated by this library; null is ignored.
unsafe fn free_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length without the NUL.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn hz_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Create contour settings. `truncation <= 0` and a NaN `ray_angle` select
/// the automatic values.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_contour_new(
    inner_radius: f64,
    truncation: f64,
    ray_angle: f64,
    branch: HzBranch,
    out: *mut *mut HzContour,
) -> HzStatus {
    guard(|| {
        if !(inner_radius.is_finite() && inner_radius > 0.0) {
            return Err(fail(HzStatus::InvalidArgument, "inner radius must be positive"));
        }
        if truncation > 0.0 && truncation <= inner_radius {
            return Err(fail(HzStatus::InvalidArgument, "truncation must exceed the inner radius"));
        }
        if ray_angle.is_infinite() || (ray_angle.is_finite() && !(0.0..std::f64::consts::FRAC_PI_2).contains(&ray_angle)) {
            return Err(fail(HzStatus::InvalidArgument, "ray angle must lie in [0, pi/2)"));
        }
        let spec = ContourSpec {
            inner_radius,
            truncation: (truncation > 0.0).then_some(truncation),
            ray_angle: ray_angle.is_finite().then_some(ray_angle),
            branch: match branch {
                HzBranch::Symmetric => BranchConvention::Symmetric,
                HzBranch::ZeroTwoPi => BranchConvention::ZeroTwoPi,
            },
            ..ContourSpec::default()
        };
        into_handle(out, HzContour(spec))
    })
}

/// # Safety
/// `contour` must be null or a handle from [`hz_contour_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hz_contour_free(contour: *mut HzContour) {
    free_handle(contour)
}

/// Explicit spectrum from `len` positive values.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_spectrum_explicit(values: *const f64, len: usize, out: *mut *mut HzSpectrum) -> HzStatus {
    guard(|| {
        if values.is_null() {
            return Err(fail(HzStatus::NullPointer, "values is null"));
        }
        let v = std::slice::from_raw_parts(values, len).to_vec();
        into_handle(out, HzSpectrum(Spectrum::explicit(v).checked()?))
    })
}

/// The spectrum {1, …, n}.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_spectrum_natural(n: usize, out: *mut *mut HzSpectrum) -> HzStatus {
    guard(|| into_handle(out, HzSpectrum(Spectrum::natural(n).checked()?)))
}

/// # Safety
/// `spectrum` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn hz_spectrum_free(spectrum: *mut HzSpectrum) {
    free_handle(spectrum)
}

/// ζ(α) from the contour representation; `contour` may be null.
///
/// # Safety
/// `contour` must be null or live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_zeta_hankel(
    alpha: HzComplex,
    contour: *const HzContour,
    near_integer: HzNearInteger,
    out: *mut HzValue,
) -> HzStatus {
    guard(|| {
        let spec = contour_or_default(contour);
        let q = zeta_hankel(alpha.into(), &spec, near_integer.into(), QuadOptions::default()).checked()?;
        *self::out(out, "out")? = value_out(q);
        Ok(())
    })
}

/// η(α) from the contour representation; `contour` may be null.
///
/// # Safety
/// `contour` must be null or live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_eta_hankel(
    alpha: HzComplex,
    contour: *const HzContour,
    near_integer: HzNearInteger,
    out: *mut HzValue,
) -> HzStatus {
    guard(|| {
        let spec = contour_or_default(contour);
        let q = eta_hankel(alpha.into(), &spec, near_integer.into(), QuadOptions::default()).checked()?;
        *self::out(out, "out")? = value_out(q);
        Ok(())
    })
}

/// Reference ζ(α) from the accelerated alternating series.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_zeta_ref(alpha: HzComplex, out: *mut HzComplex) -> HzStatus {
    guard(|| {
        let v = zeta_ref(alpha.into()).checked()?;
        *self::out(out, "out")? = v.into();
        Ok(())
    })
}

/// η(α) from the accelerated alternating series at tolerance `tol`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_eta_series(alpha: HzComplex, tol: f64, out: *mut HzComplex) -> HzStatus {
    guard(|| {
        let v = eta_series(alpha.into(), tol).checked()?;
        *self::out(out, "out")? = v.into();
        Ok(())
    })
}

/// Contour normalization constant N(α); `contour` may be null.
///
/// # Safety
/// `contour` must be null or live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_normalization_constant(
    alpha: HzComplex,
    contour: *const HzContour,
    out: *mut HzValue,
) -> HzStatus {
    guard(|| {
        let q = normalization_constant(alpha.into(), &contour_or_default(contour)).checked()?;
        *self::out(out, "out")? = value_out(q);
        Ok(())
    })
}

/// |ζ(α) − χ(α)ζ(1−α)| from the contour form; `contour` may be null.
///
/// # Safety
/// `contour` must be null or live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_functional_equation_residual(
    alpha: HzComplex,
    contour: *const HzContour,
    out: *mut f64,
) -> HzStatus {
    guard(|| {
        let r = functional_equation_residual(alpha.into(), &contour_or_default(contour)).checked()?;
        *self::out(out, "out")? = r;
        Ok(())
    })
}

/// Normalized Mellin transform of e^{−e^{−c} g}, equal to e^{cα}.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_scalar_det_side(c: f64, alpha: HzComplex, out: *mut HzValue) -> HzStatus {
    guard(|| {
        let q = scalar_det_side(c, alpha.into()).checked()?;
        *self::out(out, "out")? = value_out(q);
        Ok(())
    })
}

/// Zeros of ζ on the critical line with ordinates in [t_min, t_max].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_find_zeros(t_min: f64, t_max: f64, max_count: usize, out: *mut *mut HzZeroList) -> HzStatus {
    guard(|| into_handle(out, HzZeroList(find_zeros(t_min, t_max, max_count).checked()?)))
}

/// Number of zeros in a list; 0 for null.
///
/// # Safety
/// `list` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_list_len(list: *const HzZeroList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// # Safety
/// `list` must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_list_get(list: *const HzZeroList, index: usize, out: *mut HzZero) -> HzStatus {
    guard(|| {
        let l = handle(list, "list")?;
        let z = l.0.get(index).ok_or_else(|| {
            fail(HzStatus::InvalidArgument, &format!("index {index} out of range for {} zeros", l.0.len()))
        })?;
        *self::out(out, "out")? = HzZero {
            t: z.t,
            residual: z.residual,
            bracket_lo: z.bracket.0,
            bracket_hi: z.bracket.1,
            winding_confirmed: z.winding_confirmed,
        };
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn hz_zero_list_free(list: *mut HzZeroList) {
    free_handle(list)
}

/// Zeros of ζ in [re_lo, re_hi] × [t_lo, t_hi] by the argument principle.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hz_count_zeros(re_lo: f64, re_hi: f64, t_lo: f64, t_hi: f64, out: *mut i64) -> HzStatus {
    guard(|| {
        let n = count_zeros_rectangle(re_lo, re_hi, t_lo, t_hi).checked()?;
        *self::out(out, "out")? = n;
        Ok(())
    })
}

/// Relative residual of det(e^A) = e^{tr A} for a row-major `d × d` matrix.
///
/// # Safety
/// `entries` must point to `d * d` readable values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_exp_tr_det_residual(
    entries: *const HzComplex,
    d: usize,
    hermitian: bool,
    out: *mut f64,
) -> HzStatus {
    guard(|| {
        if entries.is_null() {
            return Err(fail(HzStatus::NullPointer, "entries is null"));
        }
        let n = d.checked_mul(d).ok_or_else(|| fail(HzStatus::InvalidArgument, "dimension overflows"))?;
        let flat = std::slice::from_raw_parts(entries, n);
        let m = MatrixOperand::new(DMatrix::from_fn(d, d, |i, j| flat[i * d + j].into()), hermitian).checked()?;
        *self::out(out, "out")? = exp_tr_det_auto(&m).checked()?.rel_residual;
        Ok(())
    })
}

/// Log-modulus and phase gaps between the two sides of the trace/determinant
/// relation for `spectrum` at α on phase branch (n, sign).
///
/// # Safety
/// `spectrum` must be live; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hz_theorem_residual(
    spectrum: *const HzSpectrum,
    alpha: HzComplex,
    phase_n: u32,
    phase_sign: i8,
    log_gap: *mut f64,
    phase_gap: *mut f64,
) -> HzStatus {
    guard(|| {
        let s = handle(spectrum, "spectrum")?;
        let phase = PhaseBranch::new(phase_n, phase_sign).checked()?;
        let r = theorem_residual(&s.0, alpha.into(), phase).checked()?;
        *out(log_gap, "log_gap")? = r.log_gap;
        *out(phase_gap, "phase_gap")? = r.phase_gap;
        Ok(())
    })
}

/// Name of a status code as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hz_status_name(status: HzStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HzStatus::Ok => c"Ok",
        HzStatus::NullPointer => c"NullPointer",
        HzStatus::InvalidArgument => c"InvalidArgument",
        HzStatus::Pole => c"PoleError",
        HzStatus::Domain => c"DomainError",
        HzStatus::Config => c"ConfigError",
        HzStatus::Accuracy => c"AccuracyError",
        HzStatus::Conditioning => c"ConditioningError",
        HzStatus::NearInteger => c"NearIntegerWarning",
        HzStatus::BoundaryZero => c"BoundaryZeroError",
        HzStatus::PhaseTracking => c"PhaseTrackingError",
        HzStatus::Overflow => c"OverflowError",
        HzStatus::Panic => c"Panic",
    };
    s.as_ptr()
}
