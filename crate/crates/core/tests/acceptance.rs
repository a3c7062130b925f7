//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use regword::arbitrary::{letters, random_regexp};
use regword::showcase::{
    create_union_regexp, generate_password, is_bin_nums, is_ends_with_a, is_passwd, string_to_word,
    word_to_string, ShowcaseError, BIN_NUMS, ENDS_WITH_A,
};
use regword::wordgen::{pick_regexp, pick_reps};
use regword::{
    enumerate_upto, gen_word, lang_equal_upto, member, parse, parse_ast, render, render_ast,
    GenConfig, RandomSource, Regexp, Symbol, Word,
};

type Check = fn() -> Result<(), String>;

fn main() {
    let criteria: &[(&str, Duration, Check)] = &[
        ("1 rendering fidelity", secs(1), rendering_fidelity),
        ("2 printed unit tests", secs(1), printed_unit_tests),
        ("3 generator soundness", secs(30), generator_soundness),
        (
            "4 oracle cross-validation",
            secs(30),
            oracle_cross_validation,
        ),
        (
            "5 derived enumeration counts",
            secs(30),
            derived_enumeration_counts,
        ),
        ("6 round-trips", secs(60), round_trips),
        ("7 password suite", secs(10), password_suite),
        ("8 distribution sanity", secs(30), distribution_sanity),
        ("9 cli contract", secs(10), cli_contract),
    ];

    let mut failures = 0;
    for (name, limit, check) in criteria {
        let started = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = started.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= *limit {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(()) => println!("PASS  {name} ({elapsed:.2?})"),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sing(a: &str) -> Regexp {
    Regexp::singleton(a).unwrap()
}

fn word(s: &str) -> Word {
    string_to_word(s).unwrap()
}

fn rendering_fidelity() -> Result<(), String> {
    let cases = [
        (Regexp::empty(), "ε"),
        (sing("z"), "z"),
        (
            Regexp::union(sing("z"), Regexp::union(sing("1"), sing("q"))),
            "(z U (1 U q))",
        ),
        (Regexp::concat(sing("i"), sing("i")), "ii"),
        (Regexp::star(Regexp::concat(sing("a"), sing("b"))), "(ab)*"),
        (ENDS_WITH_A.clone(), "(a U b)*a"),
        (BIN_NUMS.clone(), "(0 U 1(0 U 1)*)"),
    ];
    for (r, expected) in cases {
        let got = render(&r);
        ensure(got == expected, || {
            format!("rendered {got:?}, expected {expected:?}")
        })?;
    }
    Ok(())
}

fn printed_unit_tests() -> Result<(), String> {
    let bin_nums = [
        ("", false),
        ("00011010", false),
        ("0", true),
        ("1001011", true),
        ("111010001101", true),
    ];
    for (w, expected) in bin_nums {
        ensure(is_bin_nums(&word(w)) == expected, || {
            format!("is_bin_nums({w:?})")
        })?;
    }
    let ends_with_a = [
        ("a", true),
        ("bba", true),
        ("abbaba", true),
        ("", false),
        ("bbb", false),
        ("aaaab", false),
    ];
    for (w, expected) in ends_with_a {
        ensure(is_ends_with_a(&word(w)) == expected, || {
            format!("is_ends_with_a({w:?})")
        })?;
    }

    let got = create_union_regexp(&[sing("a"), sing("A")]).map_err(|e| e.to_string())?;
    ensure(got == Regexp::union(sing("a"), sing("A")), || {
        "create_union_regexp [a A]".into()
    })?;
    let got = create_union_regexp(&[sing("a"), sing("D"), sing("!")]).map_err(|e| e.to_string())?;
    ensure(
        got == Regexp::union(sing("a"), Regexp::union(sing("D"), sing("!"))),
        || "create_union_regexp [a D !]".into(),
    )?;
    let err = create_union_regexp(&[]).unwrap_err();
    ensure(
        err == ShowcaseError::ListTooShort
            && err.to_string() == "create-union-regexp: list too short",
        || format!("short list error: {err}"),
    )?;

    ensure(
        string_to_word("").map_err(|e| e.to_string())?.is_empty(),
        || "str->los \"\"".into(),
    )?;
    let chars: Vec<char> = word("a!Cop")
        .symbols()
        .iter()
        .map(|s| s.as_char())
        .collect();
    ensure(chars == ['a', '!', 'C', 'o', 'p'], || {
        "str->los \"a!Cop\"".into()
    })?;
    let ajh: Word = ['a', 'j', 'h', 'B', '!', '!', 'y', 'y', 't', 'c']
        .into_iter()
        .map(|c| Symbol::new(c).unwrap())
        .collect();
    ensure(word_to_string(&ajh) == "ajhB!!yytc", || {
        "passwd->string ajhB!!yytc".into()
    })?;
    let utqx: Word = ['$', 'u', 't', 'q', 'x', '!', 'J', 'i', 'n', '*', 'K', 'C']
        .into_iter()
        .map(|c| Symbol::new(c).unwrap())
        .collect();
    ensure(word_to_string(&utqx) == "$utqx!Jin*KC", || {
        "passwd->string $utqx!Jin*KC".into()
    })
}

fn generator_soundness() -> Result<(), String> {
    let mut tree_rng = RandomSource::from_seed(0xACCE_0003);
    let mut checked = 0;
    for tree in 0..200 {
        let alphabet = letters(1 + tree % 4);
        let r = random_regexp(&mut tree_rng, 6, &alphabet);
        for seed in 0..100 {
            let w = gen_word(&r, &mut GenConfig::seeded(seed));
            ensure(member(&r, &w), || {
                format!(
                    "{w} generated from {} (seed {seed}) is not a member",
                    render(&r)
                )
            })?;
            checked += 1;
        }
    }
    ensure(checked == 20_000, || format!("checked {checked} cases"))
}

/// Every word over `alphabet` of length at most `max_len`, shortest first.
fn all_words(alphabet: &[Symbol], max_len: usize) -> Vec<Word> {
    let mut layer = vec![Word::empty()];
    let mut out = layer.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&s| {
                    let mut next = w.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn oracle_cross_validation() -> Result<(), String> {
    let mut rng = RandomSource::from_seed(0xACCE_0004);
    for tree in 0..100 {
        let r = random_regexp(&mut rng, 4, &letters(1 + tree % 3));
        let alphabet: Vec<Symbol> = r.alphabet().into_iter().collect();
        let sample = enumerate_upto(&r, 4);
        for w in all_words(&alphabet, 4) {
            ensure(member(&r, &w) == sample.contains(&w), || {
                format!("member and enumerate disagree on {w:?} for {}", render(&r))
            })?;
        }
    }
    Ok(())
}

fn derived_enumeration_counts() -> Result<(), String> {
    // Brute force over every string of length <= 3, with the defining
    // property of each language written out directly.
    let ab = [Symbol::new('a').unwrap(), Symbol::new('b').unwrap()];
    let bits = [Symbol::new('0').unwrap(), Symbol::new('1').unwrap()];
    let brute_ends_with_a: Vec<Word> = all_words(&ab, 3)
        .into_iter()
        .filter(|w| w.to_string().ends_with('a'))
        .collect();
    let brute_bin_nums: Vec<Word> = all_words(&bits, 3)
        .into_iter()
        .filter(|w| {
            let s = w.to_string();
            !s.is_empty() && (s == "0" || s.starts_with('1'))
        })
        .collect();
    // Frozen from the brute force above.
    ensure(brute_ends_with_a.len() == 7, || {
        "brute force ends-with-a".into()
    })?;
    ensure(brute_bin_nums.len() == 8, || "brute force bin-nums".into())?;

    let e = enumerate_upto(&ENDS_WITH_A, 3);
    ensure(e.len() == 7, || {
        format!("|enumerate(ENDS_WITH_A, 3)| = {}", e.len())
    })?;
    ensure(e.words == brute_ends_with_a, || {
        "ENDS_WITH_A words differ".into()
    })?;
    let b = enumerate_upto(&BIN_NUMS, 3);
    ensure(b.len() == 8, || {
        format!("|enumerate(BIN_NUMS, 3)| = {}", b.len())
    })?;
    ensure(b.words == brute_bin_nums, || "BIN_NUMS words differ".into())
}

fn round_trips() -> Result<(), String> {
    let mut rng = RandomSource::from_seed(0xACCE_0006);
    for _ in 0..1000 {
        let r = random_regexp(&mut rng, 6, &letters(4));
        let back = parse_ast(&render_ast(&r)).map_err(|e| e.to_string())?;
        ensure(back == r, || {
            format!("AST round-trip changed {}", render_ast(&r))
        })?;
    }
    for _ in 0..200 {
        let r = random_regexp(&mut rng, 6, &letters(4));
        let back = parse(&render(&r)).map_err(|e| format!("{}: {e}", render(&r)))?;
        ensure(lang_equal_upto(&back, &r, 6), || {
            format!("surface round-trip changed the language of {}", render(&r))
        })?;
    }
    Ok(())
}

fn password_suite() -> Result<(), String> {
    for seed in 0..1000 {
        let p = generate_password(seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(is_passwd(p.as_str()), || {
            format!("seed {seed}: {p} is not a password")
        })?;
    }
    for seed in [0, 17, 999] {
        let a = generate_password(seed).map_err(|e| e.to_string())?;
        let b = generate_password(seed).map_err(|e| e.to_string())?;
        ensure(a.as_str().as_bytes() == b.as_str().as_bytes(), || {
            format!("seed {seed} not reproducible")
        })?;
    }
    Ok(())
}

fn distribution_sanity() -> Result<(), String> {
    let mut rng = RandomSource::from_seed(0xACCE_0008);
    let draws = 10_000;
    let total: usize = (0..draws).map(|_| pick_reps(10, &mut rng)).sum();
    let mean = total as f64 / draws as f64;
    ensure((mean - 5.0).abs() <= 0.2, || {
        format!("pick_reps(10) mean {mean}")
    })?;

    let chain = Regexp::union(
        sing("a"),
        Regexp::union(sing("b"), Regexp::union(sing("c"), sing("d"))),
    );
    let mut counts = std::collections::BTreeMap::new();
    for _ in 0..draws {
        *counts
            .entry(render(pick_regexp(&chain, &mut rng)))
            .or_insert(0usize) += 1;
    }
    ensure(counts.len() == 4, || {
        format!("alternatives seen: {counts:?}")
    })?;
    for (alt, n) in &counts {
        let freq = *n as f64 / draws as f64;
        ensure((freq - 0.25).abs() <= 0.03, || {
            format!("{alt} frequency {freq}")
        })?;
    }
    Ok(())
}

fn regword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regword"))
        .args(args)
        .env_remove("CI")
        .output()
        .expect("run regword")
}

fn expect_exit(args: &[&str], code: i32) -> Result<Output, String> {
    let out = regword(args);
    ensure(out.status.code() == Some(code), || {
        format!("{args:?} exited {:?}, expected {code}", out.status.code())
    })?;
    Ok(out)
}

fn cli_contract() -> Result<(), String> {
    expect_exit(&["member", "(a U b)*a", "bba"], 0)?;
    expect_exit(&["member", "(0 U 1(0 U 1)*)", "00011010"], 1)?;
    expect_exit(&["member", "ε", ""], 0)?;
    expect_exit(&["render", "(a U b"], 2)?;
    expect_exit(&["enum", "(a U b)*a", "--max-len", "13"], 3)?;
    expect_exit(&["password", "--count", "0"], 0)?;

    let enumerated = expect_exit(&["enum", "(a U b)*a", "--max-len", "3"], 0)?;
    let lines = String::from_utf8_lossy(&enumerated.stdout).lines().count();
    ensure(lines == 7, || format!("enum printed {lines} lines"))?;

    for pattern in ["(0 U 1(0 U 1)*)", "(a U b)*a", "(ab)*(c U ε)", "ε"] {
        let generated = expect_exit(&["gen", pattern, "--count", "100", "--seed", "7"], 0)?;
        let again = regword(&["gen", pattern, "--count", "100", "--seed", "7"]);
        ensure(generated.stdout == again.stdout, || {
            format!("gen {pattern} not reproducible")
        })?;
        let text = String::from_utf8_lossy(&generated.stdout).into_owned();
        let words: BTreeSet<&str> = text.lines().collect();
        ensure(text.lines().count() == 100, || "gen line count".into())?;
        for w in words {
            expect_exit(&["member", pattern, w], 0)?;
        }
    }

    let passwords = expect_exit(&["password", "--count", "5", "--seed", "1"], 0)?;
    let text = String::from_utf8_lossy(&passwords.stdout).into_owned();
    ensure(
        text.lines().count() == 5 && text.lines().all(is_passwd),
        || format!("password output {text:?}"),
    )
}
