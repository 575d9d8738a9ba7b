//! C interface to hpi-core. Every function returns an [`HpiStatus`]; on
//! failure the message is available from [`hpi_last_error`] on the same thread.
//! Strings returned through `char **` belong to the caller and are released
//! with [`hpi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hpi_core::doc::Document;
use hpi_core::haction::{decompose, h_radical, ExponentOptions};
use hpi_core::hopfzoo::catalog;
use hpi_core::pi::{codimension, exponent_report, CodimOptions};
use hpi_core::Error;

/// Result codes; values from 3 upwards match the `hpi` exit statuses.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HpiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidString = 2,
    Schema = 3,
    Io = 4,
    Field = 5,
    AxiomViolation = 6,
    RelationViolation = 7,
    NotMultiplicative = 8,
    Precondition = 9,
    NotUnital = 10,
    FieldTooSmall = 11,
    Decomposition = 12,
    ResourceCap = 13,
    TimeBudget = 14,
    Internal = 15,
    Panic = 16,
}

impl From<&Error> for HpiStatus {
    fn from(e: &Error) -> Self {
        match e.exit_code() {
            3 => HpiStatus::Schema,
            4 => HpiStatus::Io,
            5 => HpiStatus::Field,
            6 => HpiStatus::AxiomViolation,
            7 => HpiStatus::RelationViolation,
            8 => HpiStatus::NotMultiplicative,
            9 => HpiStatus::Precondition,
            10 => HpiStatus::NotUnital,
            11 => HpiStatus::FieldTooSmall,
            12 => HpiStatus::Decomposition,
            13 => HpiStatus::ResourceCap,
            14 => HpiStatus::TimeBudget,
            _ => HpiStatus::Internal,
        }
    }
}

/// A parsed algebra with its action.
pub struct HpiAction {
    doc: Document,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), HpiStatus>) -> HpiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HpiStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside hpi");
            HpiStatus::Panic
        }
    }
}

fn fail(e: Error) -> HpiStatus {
    set_error(&e.to_string());
    HpiStatus::from(&e)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, HpiStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(HpiStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not UTF-8");
        HpiStatus::InvalidString
    })
}

unsafe fn action<'a>(p: *const HpiAction) -> Result<&'a HpiAction, HpiStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null action handle");
        HpiStatus::NullPointer
    })
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), HpiStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(HpiStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), HpiStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("report contains a NUL byte");
        HpiStatus::Internal
    })?;
    write(out, c.into_raw())
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn hpi_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hpi_action_from_json(json: *const c_char, out: *mut *mut HpiAction) -> HpiStatus {
    guard(|| {
        let doc = Document::from_json(read_str(json)?).map_err(fail)?;
        write(out, Box::into_raw(Box::new(HpiAction { doc })))
    })
}

/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hpi_action_from_catalog(name: *const c_char, out: *mut *mut HpiAction) -> HpiStatus {
    guard(|| {
        let doc = catalog::load(read_str(name)?).map_err(fail)?;
        write(out, Box::into_raw(Box::new(HpiAction { doc })))
    })
}

/// # Safety
/// `action` must come from an `hpi_action_from_*` call and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hpi_action_free(action: *mut HpiAction) {
    if !action.is_null() {
        drop(Box::from_raw(action));
    }
}

/// # Safety
/// `action` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hpi_action_dim(action: *const HpiAction, out: *mut usize) -> HpiStatus {
    guard(|| write(out, self::action(action)?.doc.algebra().dim()))
}

/// Verifies the action axioms and any declared Hopf relations.
///
/// # Safety
/// `action` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hpi_check(action: *const HpiAction) -> HpiStatus {
    guard(|| {
        let doc = &self::action(action)?.doc;
        if let Some(f) = doc.action.verify_action().map_err(fail)? {
            return Err(fail(Error::AxiomViolation { generator: f.generator, a: f.a, b: f.b }));
        }
        if let Some(p) = doc.presentation().map_err(fail)? {
            if let Some(relation) = doc.action.verify_hopf_module_axioms(&p).map_err(fail)? {
                return Err(fail(Error::RelationViolation { relation }));
            }
        }
        Ok(())
    })
}

/// Dimensions of the Jacobson radical and the H-radical.
///
/// # Safety
/// `action` must be a live handle; `jacobson` and `h_rad` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hpi_radical_dims(action: *const HpiAction, jacobson: *mut usize, h_rad: *mut usize) -> HpiStatus {
    guard(|| {
        let act = &self::action(action)?.doc.action;
        let j = act.algebra().jacobson_radical().dim();
        let jh = h_radical(act).map_err(fail)?.dim();
        write(jacobson, j)?;
        write(h_rad, jh)
    })
}

/// The exponent `d`; `nilpotent` is set and `d` is 0 for nilpotent algebras.
///
/// # Safety
/// `action` must be a live handle; `d` and `nilpotent` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hpi_exponent(action: *const HpiAction, d: *mut usize, nilpotent: *mut bool) -> HpiStatus {
    guard(|| {
        let r = decompose(&self::action(action)?.doc.action, &ExponentOptions::default()).map_err(fail)?;
        write(d, r.d)?;
        write(nilpotent, r.nilpotent)
    })
}

/// `c_n` with the given row cap (0 selects the default) and thread count (0 uses all cores).
///
/// # Safety
/// `action` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hpi_codimension(
    action: *const HpiAction,
    n: usize,
    row_cap: u64,
    threads: usize,
    out: *mut usize,
) -> HpiStatus {
    guard(|| {
        let mut opts = CodimOptions::default();
        if row_cap > 0 {
            opts.row_cap = row_cap as u128;
        }
        opts.threads = (threads > 0).then_some(threads);
        let c = codimension(&self::action(action)?.doc.action, n, &opts).map_err(fail)?;
        write(out, c)
    })
}

/// JSON codimension table for `n = 1..=n_max` with `d`.
///
/// # Safety
/// `action` must be a live handle and `out` a valid pointer; free the result with `hpi_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hpi_exponent_report_json(action: *const HpiAction, n_max: usize, out: *mut *mut c_char) -> HpiStatus {
    guard(|| {
        let r = exponent_report(&self::action(action)?.doc.action, n_max, &CodimOptions::default(), &ExponentOptions::default())
            .map_err(fail)?;
        write_string(out, r.to_json())
    })
}

/// Canonical JSON of the document behind a handle.
///
/// # Safety
/// `action` must be a live handle and `out` a valid pointer; free the result with `hpi_string_free`.
#[no_mangle]
pub unsafe extern "C" fn hpi_action_to_json(action: *const HpiAction, out: *mut *mut c_char) -> HpiStatus {
    guard(|| write_string(out, self::action(action)?.doc.to_json()))
}

/// # Safety
/// `s` must come from this library and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hpi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
