//! C interface to the `boxball` library.
//!
//! States and tableaux are opaque heap handles, released with their `_free`
//! function. Strings returned through out-parameters are released with
//! [`bb_string_free`]. Every fallible call returns a [`BbStatus`]; on failure
//! [`bb_last_error`] describes the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use boxball::bbs::{self, Algorithm, State};
use boxball::notation::{self, Notation};
use boxball::tableau::Tableau;

pub struct BbState(State);

pub struct BbTableau(Tableau);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidState = 4,
    EmptyState = 5,
    Notation = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbNotation {
    Compact = 0,
    Walled = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbAlgorithm {
    Original = 0,
    Carrier = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: BbStatus, msg: impl Into<String>) -> BbStatus {
    set_error(msg);
    status
}

fn status_of(e: &boxball::Error) -> BbStatus {
    use boxball::Error;
    match e {
        Error::Parse { .. } => BbStatus::Parse,
        Error::EmptyState | Error::EmptyCarrier => BbStatus::EmptyState,
        Error::NotCompact(_) => BbStatus::Notation,
        _ => BbStatus::InvalidState,
    }
}

fn core_fail(e: boxball::Error) -> BbStatus {
    let status = status_of(&e);
    fail(status, e.to_string())
}

/// Runs `f`, turning a panic into [`BbStatus::Panic`].
fn guard(f: impl FnOnce() -> BbStatus) -> BbStatus {
    panic::catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(BbStatus::Panic, "internal panic"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> BbStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            BbStatus::Ok
        }
        Err(_) => fail(BbStatus::InvalidUtf8, "string contains NUL"),
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a state in compact or walled notation. `colors == 0` takes the
/// largest color present.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_state_parse(
    text: *const c_char,
    colors: u32,
    out: *mut *mut BbState,
) -> BbStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(BbStatus::NullArgument, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(BbStatus::InvalidUtf8, "input is not UTF-8");
        };
        let colors = (colors != 0).then_some(colors);
        match notation::parse_state(text, colors) {
            Ok(s) => {
                put(out, BbState(s));
                BbStatus::Ok
            }
            Err(e) => core_fail(e),
        }
    })
}

/// # Safety
/// `state` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bb_state_free(state: *mut BbState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// # Safety
/// `state` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_state_render(
    state: *const BbState,
    notation: BbNotation,
    out: *mut *mut c_char,
) -> BbStatus {
    guard(|| {
        if state.is_null() || out.is_null() {
            return fail(BbStatus::NullArgument, "null argument");
        }
        let notation = match notation {
            BbNotation::Compact => Notation::Compact,
            BbNotation::Walled => Notation::Walled,
        };
        match notation::render_state(&(*state).0, notation) {
            Ok(s) => put_string(out, s),
            Err(e) => core_fail(e),
        }
    })
}

/// # Safety
/// `state` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bb_state_ball_count(state: *const BbState) -> size_t {
    if state.is_null() {
        return 0;
    }
    (*state).0.ball_count()
}

unsafe fn map_state(
    state: *const BbState,
    out: *mut *mut BbState,
    f: impl FnOnce(&State) -> State,
) -> BbStatus {
    guard(|| {
        if state.is_null() || out.is_null() {
            return fail(BbStatus::NullArgument, "null argument");
        }
        put(out, BbState(f(&(*state).0)));
        BbStatus::Ok
    })
}

/// Evolves `steps` time steps.
///
/// # Safety
/// `state` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_state_evolve(
    state: *const BbState,
    steps: size_t,
    algorithm: BbAlgorithm,
    out: *mut *mut BbState,
) -> BbStatus {
    let algorithm = match algorithm {
        BbAlgorithm::Original => Algorithm::Original,
        BbAlgorithm::Carrier => Algorithm::Carrier,
    };
    map_state(state, out, |s| {
        (0..steps).fold(s.clone(), |acc, _| bbs::step(&acc, algorithm))
    })
}

/// One step backwards in time.
///
/// # Safety
/// `state` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_state_reverse_step(
    state: *const BbState,
    out: *mut *mut BbState,
) -> BbStatus {
    map_state(state, out, bbs::reverse_step)
}

/// Whether two states are equal; false if either is null.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn bb_state_equal(a: *const BbState, b: *const BbState) -> bool {
    !a.is_null() && !b.is_null() && (*a).0 == (*b).0
}

unsafe fn symbol(
    state: *const BbState,
    out: *mut *mut BbTableau,
    f: impl FnOnce(&State) -> Tableau,
) -> BbStatus {
    guard(|| {
        if state.is_null() || out.is_null() {
            return fail(BbStatus::NullArgument, "null argument");
        }
        put(out, BbTableau(f(&(*state).0)));
        BbStatus::Ok
    })
}

/// # Safety
/// `state` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_state_p_symbol(
    state: *const BbState,
    out: *mut *mut BbTableau,
) -> BbStatus {
    symbol(state, out, State::p_symbol)
}

/// # Safety
/// `state` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_state_q_symbol(
    state: *const BbState,
    out: *mut *mut BbTableau,
) -> BbStatus {
    symbol(state, out, State::q_symbol)
}

/// The Q-symbol one step after `context`, computed from `q` alone and the
/// vacant-label carrier of `context`.
///
/// # Safety
/// `q` and `context` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_q_evolve(
    q: *const BbTableau,
    context: *const BbState,
    out: *mut *mut BbTableau,
) -> BbStatus {
    guard(|| {
        if q.is_null() || context.is_null() || out.is_null() {
            return fail(BbStatus::NullArgument, "null argument");
        }
        match bbs::q_evolve(&(*q).0, &(*context).0) {
            Ok(t) => {
                put(out, BbTableau(t));
                BbStatus::Ok
            }
            Err(e) => core_fail(e),
        }
    })
}

/// Rows separated by newlines, letters by spaces.
///
/// # Safety
/// `tableau` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bb_tableau_render(
    tableau: *const BbTableau,
    out: *mut *mut c_char,
) -> BbStatus {
    guard(|| {
        if tableau.is_null() || out.is_null() {
            return fail(BbStatus::NullArgument, "null argument");
        }
        put_string(out, (*tableau).0.to_string())
    })
}

/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn bb_tableau_equal(a: *const BbTableau, b: *const BbTableau) -> bool {
    !a.is_null() && !b.is_null() && (*a).0 == (*b).0
}

/// # Safety
/// `tableau` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bb_tableau_free(tableau: *mut BbTableau) {
    if !tableau.is_null() {
        drop(Box::from_raw(tableau));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
