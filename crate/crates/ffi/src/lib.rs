//! C ABI over `twin_hanoi`.
//!
//! Every function returns a [`TwinHanoiStatus`]; results come back through
//! out-pointers. On failure, [`twin_hanoi_last_error`] describes the error
//! for the calling thread. Sequences are opaque handles freed with
//! [`twin_hanoi_seq_free`]; returned strings are freed with
//! [`twin_hanoi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twin_hanoi::graphs::{self, Kind, StateCode};
use twin_hanoi::solvers::{self, closed_forms};
use twin_hanoi::verify::{self, Params, Suite};
use twin_hanoi::{Config, CoupledConfig, Error, MoveSeq, Order, Peg};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinHanoiStatus {
    Ok = 0,
    /// Malformed configuration, peg, size or argument.
    InvalidInput = 1,
    /// Coupled configurations with different common-prefix lengths.
    Incompatible = 2,
    /// The request exceeds a size limit.
    CapacityExceeded = 3,
    NullPointer = 4,
    /// A verification suite ran and at least one check failed.
    VerificationFailed = 5,
    Internal = 6,
}

/// Opaque move sequence.
pub struct TwinHanoiMoveSeq {
    seq: MoveSeq,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TwinHanoiClosedForms {
    pub a: u64,
    pub d: u64,
    pub m: u64,
    /// Floor of 11/3 * 2^n.
    pub gp_bound: u64,
    pub small_diam: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> TwinHanoiStatus {
    match e {
        Error::Incompatible { .. } => TwinHanoiStatus::Incompatible,
        Error::CapacityExceeded { .. } => TwinHanoiStatus::CapacityExceeded,
        Error::InvalidPeg(_)
        | Error::InvalidMove(_)
        | Error::MalformedCoupled(_)
        | Error::SizeMismatch(..)
        | Error::NotBasic(_)
        | Error::InvalidArgument(_) => TwinHanoiStatus::InvalidInput,
        _ => TwinHanoiStatus::Internal,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Status(TwinHanoiStatus, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

/// Runs `body`, converting errors and panics into a status and a message.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> TwinHanoiStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TwinHanoiStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("{what} is null"));
            TwinHanoiStatus::NullPointer
        }
        Ok(Err(Failure::Status(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside twin_hanoi".into());
            TwinHanoiStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Lib(Error::InvalidArgument(format!("{what} is not UTF-8"))))
}

/// # Safety
/// `out` is null or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

fn boxed(seq: MoveSeq) -> *mut TwinHanoiMoveSeq {
    Box::into_raw(Box::new(TwinHanoiMoveSeq { seq }))
}

const MAX_SEQUENCE_DISKS: u32 = 24;

fn check_n(n: u32) -> Result<usize, Failure> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()).into());
    }
    if n > MAX_SEQUENCE_DISKS {
        return Err(Error::CapacityExceeded { needed: n as u64, budget: MAX_SEQUENCE_DISKS as u64 }.into());
    }
    Ok(n as usize)
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn twin_hanoi_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The twin-tower switching sequence on `n` disks (`alt` selects the second form, n >= 3).
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_tts(n: u32, alt: bool, out: *mut *mut TwinHanoiMoveSeq) -> TwinHanoiStatus {
    guard(|| {
        let n = check_n(n)?;
        if alt && n < 3 {
            return Err(Error::InvalidArgument("the alternative sequence needs n >= 3".into()).into());
        }
        let seq = if alt { solvers::tts_alt_seq(n) } else { solvers::tts_seq(n) };
        write_out(out, boxed(seq), "out")
    })
}

/// The small-disk shift sequence on `n` disks (`alt` needs even n >= 4).
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_sds(n: u32, alt: bool, out: *mut *mut TwinHanoiMoveSeq) -> TwinHanoiStatus {
    guard(|| {
        let n = check_n(n)?;
        if alt && (n < 4 || n % 2 == 1) {
            return Err(Error::InvalidArgument("the alternative sequence needs even n >= 4".into()).into());
        }
        let seq = if alt { solvers::sds_alt_seq(n) } else { solvers::sds_seq(n) };
        write_out(out, boxed(seq), "out")
    })
}

/// The shortest sequence from `x^n` to `y^n`.
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_corner(x: u8, y: u8, n: u32, out: *mut *mut TwinHanoiMoveSeq) -> TwinHanoiStatus {
    guard(|| {
        let n = check_n(n)?;
        let peg = |v: u8| Peg::new(v).ok_or(Error::InvalidPeg(char::from(b'0'.wrapping_add(v))));
        let (x, y) = (peg(x)?, peg(y)?);
        if x == y {
            return Err(Error::InvalidArgument("corner pegs must differ".into()).into());
        }
        write_out(out, boxed(solvers::corner_seq(x, y, n)), "out")
    })
}

/// A path between two single-tower configurations such as `"2120"`.
///
/// # Safety
/// `from` and `to` are NUL-terminated strings; `out` is valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_transform(from: *const c_char, to: *const c_char, out: *mut *mut TwinHanoiMoveSeq) -> TwinHanoiStatus {
    guard(|| {
        let u: Config = read_str(from, "from")?.parse()?;
        let v: Config = read_str(to, "to")?.parse()?;
        write_out(out, boxed(solvers::transform_single(&u, &v)?), "out")
    })
}

/// A sequence between two compatible coupled configurations `"top,bottom"`.
///
/// # Safety
/// `from` and `to` are NUL-terminated strings; `out` is valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_solve_twin(from: *const c_char, to: *const c_char, out: *mut *mut TwinHanoiMoveSeq) -> TwinHanoiStatus {
    guard(|| {
        let u: CoupledConfig = read_str(from, "from")?.parse()?;
        let v: CoupledConfig = read_str(to, "to")?.parse()?;
        write_out(out, boxed(solvers::solve_compatible(&u, &v)?), "out")
    })
}

/// Exact distance between two configurations; `coupled` selects `"top,bottom"` input.
///
/// # Safety
/// `from` and `to` are NUL-terminated strings; `out` is valid for writing.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_distance(from: *const c_char, to: *const c_char, coupled: bool, out: *mut u32) -> TwinHanoiStatus {
    guard(|| {
        let (from, to) = (read_str(from, "from")?, read_str(to, "to")?);
        let d = if coupled {
            graphs::distance_coupled(&from.parse()?, &to.parse()?)?
        } else {
            graphs::distance_single(&from.parse()?, &to.parse()?)?
        };
        write_out(out, d, "out")
    })
}

/// Closed-form values for `n` disks (`1 <= n <= 60`).
///
/// # Safety
/// `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_closed_forms(n: u32, out: *mut TwinHanoiClosedForms) -> TwinHanoiStatus {
    guard(|| {
        let n = n as usize;
        if !(1..=closed_forms::MAX_CLOSED_FORM_N).contains(&n) {
            return Err(Error::InvalidArgument(format!("n must lie in 1..={}", closed_forms::MAX_CLOSED_FORM_N)).into());
        }
        let c = closed_forms::closed_forms(n);
        write_out(out, TwinHanoiClosedForms { a: c.a, d: c.d, m: c.m, gp_bound: c.gp_bound, small_diam: c.small_diam }, "out")
    })
}

/// Runs a verification suite (`"lemma"`, `"tts"`, `"sds"`, `"structure"`, `"gp"` or `"all"`)
/// and writes its JSON report. Returns `VerificationFailed` (with the report
/// still written) when a check fails.
///
/// # Safety
/// `suite` is a NUL-terminated string; `out_json` is valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_verify(
    suite: *const c_char,
    max_n: u32,
    samples: u32,
    seed: u64,
    out_json: *mut *mut c_char,
) -> TwinHanoiStatus {
    guard(|| {
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let params = Params { max_n: max_n as usize, samples: samples as usize, seed };
        let report = verify::run_suite(suite, params)?;
        let text = serde_json::to_string(&report).map_err(|e| Error::Internal(e.to_string()))?;
        write_out(out_json, new_string(text), "out_json")?;
        if !report.ok() {
            return Err(Failure::Status(TwinHanoiStatus::VerificationFailed, format!("suite {suite} failed")));
        }
        Ok(())
    })
}

/// Number of moves in `seq` (0 for null).
///
/// # Safety
/// `seq` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_seq_len(seq: *const TwinHanoiMoveSeq) -> usize {
    seq.as_ref().map_or(0, |s| s.seq.len())
}

/// The sequence as text, right to left unless `applied_order`; free with
/// [`twin_hanoi_string_free`]. Null when `seq` is null.
///
/// # Safety
/// `seq` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_seq_render(seq: *const TwinHanoiMoveSeq, applied_order: bool) -> *mut c_char {
    match seq.as_ref() {
        Some(s) => new_string(s.seq.render(if applied_order { Order::Applied } else { Order::Written })),
        None => ptr::null_mut(),
    }
}

/// Applies `seq` to a configuration (`"0120"`) or coupled configuration (`"0120,2201"`).
///
/// # Safety
/// `seq` is a live handle, `config` a NUL-terminated string, `out` valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_seq_apply(
    seq: *const TwinHanoiMoveSeq,
    config: *const c_char,
    out: *mut *mut c_char,
) -> TwinHanoiStatus {
    guard(|| {
        let seq = &seq.as_ref().ok_or(Failure::Null("seq"))?.seq;
        let text = read_str(config, "config")?;
        let result = if text.contains(',') {
            text.parse::<CoupledConfig>()?.apply_seq(seq).to_string()
        } else {
            text.parse::<Config>()?.apply_seq(seq).to_string()
        };
        write_out(out, new_string(result), "out")
    })
}

/// Packed code of a configuration, as used in distance-cache files.
///
/// # Safety
/// `config` is a NUL-terminated string; `out` is valid for writing.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_state_code(config: *const c_char, out: *mut u64) -> TwinHanoiStatus {
    guard(|| {
        let text = read_str(config, "config")?;
        let (kind, n) =
            if text.contains(',') { (Kind::Coupled, text.split(',').next().unwrap_or("").len()) } else { (Kind::Single, text.len()) };
        graphs::state::check_disks(kind, n)?;
        let code = match kind {
            Kind::Single => StateCode::single(&text.parse()?),
            Kind::Coupled => StateCode::coupled(&text.parse()?),
        };
        write_out(out, code.0, "out")
    })
}

/// # Safety
/// `seq` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_seq_free(seq: *mut TwinHanoiMoveSeq) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn twin_hanoi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
