//! C ABI for regword.
//!
//! Regexps cross the boundary as opaque `RegwordRegexp` handles. Every
//! function returns a `RegwordStatus`; results come back through out
//! pointers. Strings handed out by this library must be released with
//! [`regword_string_free`], handles with [`regword_regexp_free`]. After a
//! non-OK status, [`regword_last_error`] describes the failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use regword::showcase::{generate_password, string_to_word};
use regword::{
    enumerate_upto, gen_word, member, parse, parse_ast, render, render_ast, GenConfig,
    RandomSource, Regexp, Word,
};

/// Opaque regexp handle.
pub struct RegwordRegexp {
    inner: Regexp,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegwordStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    GenerationFailed = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(message).ok());
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

struct Failure(RegwordStatus, String);

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> RegwordStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RegwordStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            RegwordStatus::Panic
        }
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(
            RegwordStatus::NullArgument,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        Failure(
            RegwordStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

/// # Safety
/// `re` must be null or a live handle from this library.
unsafe fn read_handle<'a>(re: *const RegwordRegexp) -> Result<&'a Regexp, Failure> {
    re.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| Failure(RegwordStatus::NullArgument, "regexp handle is null".into()))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            RegwordStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let owned = CString::new(s).expect("rendered text has no NUL bytes");
    if out.is_null() {
        return Err(Failure(
            RegwordStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    out.write(owned.into_raw());
    Ok(())
}

unsafe fn parse_with(
    text: *const c_char,
    out: *mut *mut RegwordRegexp,
    parser: fn(&str) -> Result<Regexp, regword::ParseError>,
) -> RegwordStatus {
    guard(|| {
        let text = read_str(text, "pattern")?;
        let inner = parser(text).map_err(|e| Failure(RegwordStatus::ParseError, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(RegwordRegexp { inner })))
    })
}

/// Parses a pattern in surface syntax, e.g. `(a U b)*a`.
///
/// # Safety
/// `pattern` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_parse(
    pattern: *const c_char,
    out: *mut *mut RegwordRegexp,
) -> RegwordStatus {
    parse_with(pattern, out, parse)
}

/// Parses a pattern in AST form, e.g. `(star (sing "a"))`.
///
/// # Safety
/// `ast` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_parse_ast(
    ast: *const c_char,
    out: *mut *mut RegwordRegexp,
) -> RegwordStatus {
    parse_with(ast, out, parse_ast)
}

/// # Safety
/// `re` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn regword_regexp_free(re: *mut RegwordRegexp) {
    if !re.is_null() {
        drop(Box::from_raw(re));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn regword_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn regword_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `re` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_render(
    re: *const RegwordRegexp,
    out: *mut *mut c_char,
) -> RegwordStatus {
    guard(|| write_string(out, render(read_handle(re)?)))
}

/// # Safety
/// `re` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_render_ast(
    re: *const RegwordRegexp,
    out: *mut *mut c_char,
) -> RegwordStatus {
    guard(|| write_string(out, render_ast(read_handle(re)?)))
}

/// Generates one word. The empty word comes back as `""`.
///
/// # Safety
/// `re` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_gen_word(
    re: *const RegwordRegexp,
    seed: u64,
    max_star_reps: u32,
    out: *mut *mut c_char,
) -> RegwordStatus {
    guard(|| {
        let r = read_handle(re)?;
        let mut cfg = GenConfig::new(max_star_reps as usize, RandomSource::from_seed(seed));
        write_string(out, gen_word(r, &mut cfg).to_string())
    })
}

/// Tests membership. `""` and `"ε"` denote the empty word; a word with a
/// character outside the alphabet is never a member.
///
/// # Safety
/// `re` must be a live handle; `word` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn regword_member(
    re: *const RegwordRegexp,
    word: *const c_char,
    out: *mut bool,
) -> RegwordStatus {
    guard(|| {
        let r = read_handle(re)?;
        let text = read_str(word, "word")?;
        let w = if text == "ε" {
            Some(Word::empty())
        } else {
            string_to_word(text).ok()
        };
        write_out(out, w.is_some_and(|w| member(r, &w)))
    })
}

/// Every word of length at most `max_len`, one per line in shortlex order,
/// each terminated by `\n`. The empty word is written as `ε`.
///
/// # Safety
/// `re` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_enumerate(
    re: *const RegwordRegexp,
    max_len: u32,
    out: *mut *mut c_char,
) -> RegwordStatus {
    guard(|| {
        let r = read_handle(re)?;
        let mut text = String::new();
        for w in enumerate_upto(r, max_len as usize).iter() {
            if w.is_empty() {
                text.push('ε');
            } else {
                text.push_str(&w.to_string());
            }
            text.push('\n');
        }
        write_string(out, text)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn regword_generate_password(
    seed: u64,
    out: *mut *mut c_char,
) -> RegwordStatus {
    guard(|| {
        let p = generate_password(seed)
            .map_err(|e| Failure(RegwordStatus::GenerationFailed, e.to_string()))?;
        write_string(out, p.into_string())
    })
}
