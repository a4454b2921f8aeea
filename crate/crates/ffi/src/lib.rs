//! C ABI for the `bhe` library.
//!
//! Every fallible function returns a [`BheStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can
//! be read with [`bhe_last_error_message`]. Black holes are opaque handles
//! created by `*_new` functions and released with the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bhe::channels::{
    channel_figures, fidelity_boson_construction, log_negativity_boson, log_negativity_fermion,
};
use bhe::fock_oracle::{
    bell_state_bosonic, bell_state_fermionic, bob_post_state_bosonic, bob_post_state_fermionic,
    negativity_blockwise, negativity_numeric, teleportation_fidelity, DualRailQubit, Outcome,
};
use bhe::modes::{occupation, squeeze, SqueezingParams, Statistics};
use bhe::{Error, RotatingBH, SchwarzschildBH};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BheStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    NakedSingularity = 3,
    Superradiant = 4,
    Truncation = 5,
    NotSymmetric = 6,
    NoConvergence = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BheStatistics {
    Boson = 0,
    Fermion = 1,
}

impl From<BheStatistics> for Statistics {
    fn from(s: BheStatistics) -> Self {
        match s {
            BheStatistics::Boson => Statistics::Boson,
            BheStatistics::Fermion => Statistics::Fermion,
        }
    }
}

/// Opaque d-dimensional Schwarzschild black hole.
pub struct BheSchwarzschild(SchwarzschildBH);

/// Opaque (4+n)-dimensional singly rotating black hole.
pub struct BheRotating(RotatingBH);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> BheStatus {
    match e {
        Error::Domain(_) => BheStatus::Domain,
        Error::NakedSingularity { .. } => BheStatus::NakedSingularity,
        Error::Superradiant { .. } => BheStatus::Superradiant,
        Error::Truncation { .. } => BheStatus::Truncation,
        Error::NotSymmetric { .. } => BheStatus::NotSymmetric,
        Error::NoConvergence { .. } => BheStatus::NoConvergence,
    }
}

/// Run `f`, store its value in `out`, and translate errors and panics.
fn guard<T, F>(out: *mut T, f: F) -> BheStatus
where
    F: FnOnce() -> bhe::Result<T>,
{
    if out.is_null() {
        set_error("output pointer is null".into());
        return BheStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: checked non-null above; the caller provides a writable T.
            unsafe { out.write(v) };
            clear_error();
            BheStatus::Ok
        }
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            BheStatus::Panic
        }
    }
}

fn with_handle<H, T>(h: *const H, out: *mut T, f: impl FnOnce(&H) -> bhe::Result<T>) -> BheStatus {
    if h.is_null() {
        set_error("handle is null".into());
        return BheStatus::NullPointer;
    }
    // SAFETY: non-null handles come from the matching *_new function.
    let h = unsafe { &*h };
    guard(out, || f(h))
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bhe_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bhe_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(c) => c,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_new(d: u32, r_h: f64, out: *mut *mut BheSchwarzschild) -> BheStatus {
    guard(out, || SchwarzschildBH::new(d, r_h).map(|b| Box::into_raw(Box::new(BheSchwarzschild(b)))))
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_from_mass(d: u32, mass: f64, out: *mut *mut BheSchwarzschild) -> BheStatus {
    guard(out, || SchwarzschildBH::from_mass(d, mass).map(|b| Box::into_raw(Box::new(BheSchwarzschild(b)))))
}

/// # Safety
/// `h` must be NULL or a handle from `bhe_schwarzschild_*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_free(h: *mut BheSchwarzschild) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_horizon_radius(h: *const BheSchwarzschild, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.horizon_radius()))
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_mass(h: *const BheSchwarzschild, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.mass()))
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_surface_gravity(h: *const BheSchwarzschild, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.surface_gravity()))
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_temperature(h: *const BheSchwarzschild, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.temperature()))
}

/// Tortoise coordinate r_* at radius r > r_h.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_schwarzschild_tortoise(h: *const BheSchwarzschild, r: f64, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| b.0.tortoise(r))
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_new(n: u32, mu: f64, a: f64, out: *mut *mut BheRotating) -> BheStatus {
    guard(out, || RotatingBH::new(n, mu, a).map(|b| Box::into_raw(Box::new(BheRotating(b)))))
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_from_horizon(n: u32, r_h: f64, a_star: f64, out: *mut *mut BheRotating) -> BheStatus {
    guard(out, || RotatingBH::from_horizon(n, r_h, a_star).map(|b| Box::into_raw(Box::new(BheRotating(b)))))
}

/// # Safety
/// `h` must be NULL or a handle from `bhe_rotating_*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_free(h: *mut BheRotating) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_horizon_radius(h: *const BheRotating, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.horizon_radius()))
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_surface_gravity(h: *const BheRotating, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.surface_gravity()))
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_angular_velocity(h: *const BheRotating, out: *mut f64) -> BheStatus {
    with_handle(h, out, |b| Ok(b.0.angular_velocity()))
}

/// # Safety
/// `h` must be a live handle; `mass` and `angular_momentum` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn bhe_rotating_mass_and_spin(
    h: *const BheRotating,
    mass: *mut f64,
    angular_momentum: *mut f64,
) -> BheStatus {
    if angular_momentum.is_null() {
        set_error("output pointer is null".into());
        return BheStatus::NullPointer;
    }
    let mut j = 0.0;
    let status = with_handle(h, mass, |b| {
        let (m, jj) = b.0.mass_and_angular_momentum();
        j = jj;
        Ok(m)
    });
    if status == BheStatus::Ok {
        angular_momentum.write(j);
    }
    status
}

/// Squeezing parameter r for effective frequency ω̃ and surface gravity κ.
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_squeezing(omega_eff: f64, kappa: f64, statistics: BheStatistics, out: *mut f64) -> BheStatus {
    guard(out, || squeeze(omega_eff, kappa, statistics.into()).map(|p| p.r()))
}

/// Mean occupation 1/(e^{2π ω̃/κ} ∓ 1).
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_occupation(omega_eff: f64, kappa: f64, statistics: BheStatistics, out: *mut f64) -> BheStatus {
    guard(out, || occupation(omega_eff, kappa, statistics.into()))
}

/// Closed-form logarithmic negativity.
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_log_negativity(
    omega_eff: f64,
    kappa: f64,
    statistics: BheStatistics,
    tol: f64,
    out: *mut f64,
) -> BheStatus {
    guard(out, || channel_figures(omega_eff, kappa, statistics.into(), tol).map(|c| c.log_negativity))
}

/// Closed-form teleportation fidelity ((1 − e^{−π ω̃/κ})³ for bosons,
/// cos²r for fermions).
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_fidelity(
    omega_eff: f64,
    kappa: f64,
    statistics: BheStatistics,
    out: *mut f64,
) -> BheStatus {
    guard(out, || channel_figures(omega_eff, kappa, statistics.into(), 1e-10).map(|c| c.fidelity))
}

/// Bosonic fidelity cosh⁻⁶r obtained by constructing Bob's state.
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_fidelity_boson_construction(r: f64, out: *mut f64) -> BheStatus {
    guard(out, || SqueezingParams::boson_from_r(r).and_then(|p| fidelity_boson_construction(&p)))
}

/// Closed-form E_N from the squeezing parameter r.
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_log_negativity_from_r(r: f64, statistics: BheStatistics, tol: f64, out: *mut f64) -> BheStatus {
    guard(out, || match statistics {
        BheStatistics::Boson => log_negativity_boson(r, tol).map(|n| n.value),
        BheStatistics::Fermion => log_negativity_fermion(r),
    })
}

/// E_N from the spectrum of the partial transpose of the truncated state
/// (`n_trunc` is ignored for fermions).
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_oracle_log_negativity(r: f64, statistics: BheStatistics, n_trunc: usize, out: *mut f64) -> BheStatus {
    guard(out, || {
        let rho = match statistics {
            BheStatistics::Boson => bell_state_bosonic(r, n_trunc)?,
            BheStatistics::Fermion => bell_state_fermionic(r)?,
        };
        negativity_numeric(&rho).map(|n| n.log_negativity)
    })
}

/// Bosonic E_N with each term of the state partially transposed on its own.
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_oracle_log_negativity_blockwise(r: f64, n_trunc: usize, out: *mut f64) -> BheStatus {
    guard(out, || negativity_blockwise(r, n_trunc).map(|n| n.log_negativity))
}

/// Teleportation fidelity from Bob's constructed state, for the input qubit
/// cos θ |0⟩ + sin θ |1⟩ and measurement outcome (i, j).
///
/// # Safety
/// `out` must be a valid pointer to one double.
#[no_mangle]
pub unsafe extern "C" fn bhe_oracle_teleport_fidelity(
    r: f64,
    statistics: BheStatistics,
    theta: f64,
    i: u8,
    j: u8,
    n_trunc: usize,
    out: *mut f64,
) -> BheStatus {
    guard(out, || {
        let outcome = Outcome::new(i, j)?;
        let q = DualRailQubit::from_angle(theta);
        let rho = match statistics {
            BheStatistics::Boson => bob_post_state_bosonic(r, &q, outcome, n_trunc)?,
            BheStatistics::Fermion => bob_post_state_fermionic(r, &q, outcome)?,
        };
        teleportation_fidelity(&rho, &q, outcome)
    })
}
