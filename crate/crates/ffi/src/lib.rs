//! C ABI over `syncideal`.
//!
//! Automata are passed as opaque handles created by `*_parse`, `*_from_words`
//! or the analysis functions, and released with the matching `*_free`.
//! Every fallible function returns an [`SiStatus`]; on failure a message is
//! available from [`si_last_error`] until the next call on the same thread.
//! Strings handed out by the library are released with [`si_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use syncideal::automata::{Acceptor, Semiautomaton};
use syncideal::error::Error;
use syncideal::factors::find_missing_factor;
use syncideal::io::{parse_aut, parse_words, serialize_acceptor, serialize_semiautomaton, AutFile};
use syncideal::reset::{is_synchronizing, minimal_words_recognizer, shortest_reset_word, syn_recognizer};
use syncideal::tail::{construct_tail_automaton, GeneratorSet};
use syncideal::verify::{verify_syn_equals_ideal, Mode, DEFAULT_BUDGET};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    WrongKind = 5,
    NotSynchronizing = 6,
    NotFound = 7,
    BudgetExceeded = 8,
    Panic = 9,
}

/// Opaque complete deterministic automaton without initial or final states.
pub struct SiSemiautomaton(Semiautomaton);

/// Opaque (possibly partial) deterministic acceptor.
pub struct SiAcceptor(Acceptor);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> SiStatus {
    match e {
        Error::Parse { .. } | Error::UnknownSymbol(_) => SiStatus::Parse,
        Error::NotSynchronizing => SiStatus::NotSynchronizing,
        Error::BudgetExceeded { .. } | Error::EnumerationTooLarge { .. } => SiStatus::BudgetExceeded,
        _ => SiStatus::InvalidInput,
    }
}

struct Fail(SiStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SiStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SiStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SiStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(SiStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(SiStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SiStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

// The output pointer is checked before anything is allocated for it.
unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    put(out, ptr::null_mut())?;
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    put(out, ptr::null_mut())?;
    out.write(owned(s));
    Ok(())
}

/// Message of the last failure on this thread, or an empty string. Valid
/// until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn si_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn si_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `.aut` text describing a semiautomaton.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_semiautomaton_parse(text: *const c_char, out: *mut *mut SiSemiautomaton) -> SiStatus {
    guard(|| {
        let a = match parse_aut(c_str(text)?)? {
            AutFile::Semiautomaton(a) => a,
            AutFile::Acceptor(_) => return Err(Fail(SiStatus::WrongKind, "expected a semiautomaton".into())),
        };
        put_handle(out, SiSemiautomaton(a))
    })
}

/// # Safety
/// `a` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn si_semiautomaton_free(a: *mut SiSemiautomaton) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_semiautomaton_state_count(a: *const SiSemiautomaton, out: *mut usize) -> SiStatus {
    guard(|| put(out, get(a)?.0.n()))
}

/// Canonical `.aut` text; release with [`si_string_free`].
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_semiautomaton_serialize(a: *const SiSemiautomaton, out: *mut *mut c_char) -> SiStatus {
    guard(|| put_string(out, serialize_semiautomaton(&get(a)?.0)))
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_is_synchronizing(a: *const SiSemiautomaton, out: *mut bool) -> SiStatus {
    guard(|| put(out, is_synchronizing(&get(a)?.0)))
}

/// Shortlex-least shortest reset word, rendered with the automaton's
/// symbols. Returns `NotSynchronizing` when there is none.
///
/// # Safety
/// `a` must be a live handle; `word` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_shortest_reset_word(a: *const SiSemiautomaton, word: *mut *mut c_char) -> SiStatus {
    guard(|| {
        let a = &get(a)?.0;
        let w = shortest_reset_word(a).ok_or(Error::NotSynchronizing)?;
        put_string(word, a.alphabet().render(&w))
    })
}

/// Parses `.aut` text describing an acceptor.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_acceptor_parse(text: *const c_char, out: *mut *mut SiAcceptor) -> SiStatus {
    guard(|| {
        let d = match parse_aut(c_str(text)?)? {
            AutFile::Acceptor(d) => d,
            AutFile::Semiautomaton(_) => return Err(Fail(SiStatus::WrongKind, "expected an acceptor".into())),
        };
        put_handle(out, SiAcceptor(d))
    })
}

/// Minimal acceptor of a word list (`alphabet` header, one word per line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_acceptor_from_words(text: *const c_char, out: *mut *mut SiAcceptor) -> SiStatus {
    guard(|| {
        let (alphabet, words) = parse_words(c_str(text)?)?;
        put_handle(out, SiAcceptor(Acceptor::from_words(alphabet, &words)?))
    })
}

/// # Safety
/// `d` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn si_acceptor_free(d: *mut SiAcceptor) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_acceptor_state_count(d: *const SiAcceptor, out: *mut usize) -> SiStatus {
    guard(|| put(out, get(d)?.0.n()))
}

/// # Safety
/// `d` must be a live handle; `word` must be a NUL-terminated string;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_acceptor_accepts(d: *const SiAcceptor, word: *const c_char, out: *mut bool) -> SiStatus {
    guard(|| {
        let d = &get(d)?.0;
        let w = d.alphabet().parse_word(c_str(word)?)?;
        put(out, d.accepts(&w))
    })
}

/// Canonical `.aut` text; release with [`si_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_acceptor_serialize(d: *const SiAcceptor, out: *mut *mut c_char) -> SiStatus {
    guard(|| put_string(out, serialize_acceptor(&get(d)?.0)))
}

/// Minimal acceptor of the reset words of `a`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_syn_recognizer(a: *const SiSemiautomaton, out: *mut *mut SiAcceptor) -> SiStatus {
    guard(|| put_handle(out, SiAcceptor(syn_recognizer(&get(a)?.0))))
}

/// Minimal acceptor of the minimal words of the ideal recognized by `ideal`.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_minimal_words(ideal: *const SiAcceptor, out: *mut *mut SiAcceptor) -> SiStatus {
    guard(|| put_handle(out, SiAcceptor(minimal_words_recognizer(&get(ideal)?.0)?)))
}

/// Shortest length `ell <= max_len` with a word of that length that is a
/// factor of no word of `m`, and the lexicographically least such word.
/// Returns `NotFound` when every word up to `max_len` is a factor.
///
/// # Safety
/// `m` must be a live handle; `ell` and `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_missing_factor(
    m: *const SiAcceptor,
    max_len: usize,
    ell: *mut usize,
    witness: *mut *mut c_char,
) -> SiStatus {
    guard(|| {
        let m = &get(m)?.0;
        let (len, w) = find_missing_factor(m, max_len)
            .ok_or_else(|| Fail(SiStatus::NotFound, format!("no missing factor up to length {max_len}")))?;
        put(ell, len)?;
        put_string(witness, m.alphabet().render(&w))
    })
}

/// Tail structure automaton of the ideal generated by the factor-free
/// language `m`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn si_construct_tail(m: *const SiAcceptor, out: *mut *mut SiSemiautomaton) -> SiStatus {
    guard(|| {
        let gens = GeneratorSet::new(&get(m)?.0)?;
        put_handle(out, SiSemiautomaton(construct_tail_automaton(&gens)?.automaton))
    })
}

/// Checks that the reset words of `a` are exactly the ideal generated by
/// `m`: exactly when `bound` is 0, otherwise on all words up to `bound`.
/// On a failed check `counterexample` receives the shortlex-least word on
/// which membership differs (null when `ok` is true).
///
/// # Safety
/// `a` and `m` must be live handles; `ok` and `counterexample` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn si_verify(
    a: *const SiSemiautomaton,
    m: *const SiAcceptor,
    bound: usize,
    ok: *mut bool,
    counterexample: *mut *mut c_char,
) -> SiStatus {
    guard(|| {
        let a = &get(a)?.0;
        let m = &get(m)?.0;
        let mode = if bound == 0 { Mode::Exact } else { Mode::Bounded(bound) };
        let v = verify_syn_equals_ideal(a, m, mode, DEFAULT_BUDGET)?;
        put(counterexample, ptr::null_mut())?;
        put(ok, v.ok)?;
        if let Some(u) = v.counterexample {
            counterexample.write(owned(a.alphabet().render(&u)));
        }
        Ok(())
    })
}
