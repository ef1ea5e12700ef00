//! Reproducible experiments. Each returns a [`Report`] whose verdicts decide
//! PASS/FAIL; the `reproduce` subcommand and the acceptance tests share them.

use epiword::analysis::{
    check_rich_bispecial, check_rich_crw, e_extension_palindromicity, equal_length_return_words, h_profile,
    letter_gap_palindromicity, palindromic_extension_letter, return_words,
};
use epiword::generators::{example3_word, image_source, s_preimage_source, standard_episturmian};
use epiword::morphisms::{
    binary_projection, class_p_witness, find_pret_radius, is_pret, s_operator, s_preimage, sigma, Morphism,
};
use epiword::palindrome::{defect, defect_profile, AntimorphismKind};
use epiword::word::{is_palindrome, occurrences};
use epiword::{Alphabet, DirectiveSpec, FactorIndex, Letter, PrefixSource, Word};
use rayon::prelude::*;

use crate::parse::parse_directive;
use crate::report::{Report, VerdictRecord};
use crate::sample::{sample_directives, sample_mixed};
use crate::source::directive_text;
use crate::sweep::proper_subsets;
use crate::{usage, Result};

pub const IDS: [&str; 11] = [
    "example3",
    "fib-remark",
    "remark7",
    "theorem1",
    "theorem2",
    "prop12",
    "richness",
    "classifier",
    "oracle",
    "s-roundtrip",
    "lemmas",
];

pub const DEFAULT_SEED: u64 = 20_150_301;

/// Runs an experiment by id with its default parameters.
pub fn reproduce(id: &str) -> Result<Report> {
    match id {
        "example3" => example3(&Example3::default()),
        "fib-remark" => fib_remark(&FibRemark::default()),
        "remark7" => remark7(&Remark7::default()),
        "theorem1" => theorem1(&Theorem1::default()),
        "theorem2" => theorem2(&Theorem2::default()),
        "prop12" => prop12(&Prop12::default()),
        "richness" => richness(&Richness::default()),
        "classifier" => classifier(),
        "oracle" => oracle(&Oracle::default()),
        "s-roundtrip" => s_roundtrip(12),
        "lemmas" => lemmas(&Lemmas::default()),
        _ => usage(format!("unknown experiment {id:?}; known: {}", IDS.join(", "))),
    }
}

/// Defect constant over the last 90% of the checkpoints.
pub fn plateaus(profile: &[(usize, usize)]) -> bool {
    let tail = (profile.len() * 9).div_ceil(10);
    let tail = &profile[profile.len() - tail..];
    tail.windows(2).all(|p| p[0].1 == p[1].1)
}

/// Strictly increasing over at least 5 checkpoints.
pub fn grows(profile: &[(usize, usize)]) -> bool {
    profile.len() >= 5 && profile.windows(2).all(|p| p[0].1 < p[1].1)
}

fn profile_text(profile: &[(usize, usize)]) -> String {
    let parts: Vec<String> = profile.iter().map(|(n, d)| format!("{n}:{d}")).collect();
    parts.join(" ")
}

fn ternary() -> Alphabet {
    Alphabet::new(3).expect("ternary")
}

fn images(texts: &[&str]) -> Morphism {
    Morphism::parse_images(texts).expect("static morphism")
}

pub const EXAMPLE3_IMAGES: [&str; 3] = ["0100", "01011", "010111"];
pub const FIB_REMARK_IMAGES: [&str; 2] = ["110100110010", "1"];

pub fn example3_morphism() -> Morphism {
    images(&EXAMPLE3_IMAGES)
}

pub fn fib_remark_morphism() -> Morphism {
    images(&FIB_REMARK_IMAGES)
}

pub fn fibonacci_morphism() -> Morphism {
    images(&["01", "0"])
}

// ---------------------------------------------------------------- richness

#[derive(Clone, Debug)]
pub struct Richness {
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
}

impl Default for Richness {
    fn default() -> Self {
        Richness { samples: 50, depth: 10_000, seed: DEFAULT_SEED }
    }
}

/// Defect of prefixes of random ternary standard episturmian words.
pub fn richness(p: &Richness) -> Result<Report> {
    let mut report = Report::new("richness", &["sample", "directive", "defect"]);
    report.param("samples", p.samples).param("depth", p.depth).param("seed", p.seed);
    let specs = sample_directives(p.seed, 3, p.samples);
    let defects: Vec<usize> = specs.par_iter().map(|s| defect(&standard_episturmian(s).prefix(p.depth))).collect();
    for (i, (s, d)) in specs.iter().zip(defects).enumerate() {
        report.row(p.depth, [i.to_string(), directive_text(s), d.to_string()]);
        report.verdict(VerdictRecord::new("defect-zero", directive_text(s), p.depth, d == 0));
    }
    Ok(report)
}

// -------------------------------------------------------------- fib-remark

#[derive(Clone, Debug)]
pub struct FibRemark {
    pub checkpoints: Vec<usize>,
}

impl Default for FibRemark {
    fn default() -> Self {
        FibRemark { checkpoints: vec![1_000, 2_000, 5_000, 10_000, 20_000, 50_000, 100_000] }
    }
}

/// `π: 0 -> 110100110010, 1 -> 1` on the Fibonacci word.
pub fn fib_remark(p: &FibRemark) -> Result<Report> {
    let pi = fib_remark_morphism();
    let r = Word::digits("11", 2)?;
    let mut report = Report::new("fib-remark", &["quantity", "value"]);
    report.param("morphism", &pi).param("radius", &r).param("checkpoints", format!("{:?}", p.checkpoints));

    let pi0 = pi.image(0);
    let d0 = defect(pi0);
    report.row(pi0.len(), ["D(pi(0))".to_string(), d0.to_string()]);
    report.verdict(VerdictRecord::new("defect-of-image-of-0", "expected 1", pi0.len(), d0 == 1));

    let mut pret = VerdictRecord::new("pret", format!("r={r}"), 0, is_pret(&pi, &r));
    if !pret.passed() {
        pret = pret.with_counterexample(pret_failure(&pi, &r));
    }
    report.verdict(pret);

    let fib = DirectiveSpec::periodic(&[0, 1])?;
    let mut src = image_source(&pi, standard_episturmian(&fib).boxed())?;
    let profile = defect_profile(&mut src, &p.checkpoints)?;
    for &(n, d) in &profile {
        report.row(n, ["defect".to_string(), d.to_string()]);
    }
    let first = profile.iter().position(|&(_, d)| d == 2);
    let plateau = first.is_some_and(|i| profile[i..].iter().all(|&(_, d)| d == 2));
    let depth = profile.last().map_or(0, |x| x.0);
    let mut v = VerdictRecord::new("plateau-at-2", "after first reaching 2", depth, plateau);
    if !plateau {
        v = v.with_counterexample(profile_text(&profile));
    }
    report.verdict(v);
    Ok(report)
}

/// Describes which P_ret condition fails for `m` and `r`.
pub fn pret_failure(m: &Morphism, r: &Word) -> String {
    if !r.is_palindrome() {
        return format!("{r} is not a palindrome");
    }
    for (a, img) in m.images().iter().enumerate() {
        let complete = img.concat(r);
        if !complete.is_palindrome() {
            return format!("image of {a} followed by {r} is not a palindrome: {complete}");
        }
        let occ = occurrences(complete.letters(), r.letters());
        if occ != [0, img.len()] {
            return format!("{r} occurs at {occ:?} in {complete}, not exactly as prefix and suffix");
        }
    }
    "two letters share an image".to_string()
}

// ---------------------------------------------------------------- example3

#[derive(Clone, Debug)]
pub struct Example3 {
    pub levels: usize,
    pub image_levels: usize,
}

impl Default for Example3 {
    fn default() -> Self {
        Example3 { levels: 4, image_levels: 5 }
    }
}

pub fn example3(p: &Example3) -> Result<Report> {
    let phi = example3_morphism();
    let mut report = Report::new("example3", &["quantity", "level", "value"]);
    report.param("morphism", &phi).param("levels", p.levels).param("image-levels", p.image_levels);
    let mut v = example3_word();
    for i in 1..=p.levels {
        let vi = v.level(i);
        let d = defect(&vi);
        report.row(vi.len(), ["D(v_i)".to_string(), i.to_string(), d.to_string()]);
        report.verdict(VerdictRecord::new("level-rich", format!("i={i}"), vi.len(), d == 0));
    }
    let checkpoints: Vec<usize> =
        (1..=p.image_levels).map(|i| phi.apply(&v.level(i)).map(|w| w.len())).collect::<std::result::Result<_, _>>()?;
    let mut src = image_source(&phi, example3_word().boxed())?;
    let profile = defect_profile(&mut src, &checkpoints)?;
    for (i, &(n, d)) in profile.iter().enumerate() {
        report.row(n, ["D(phi(v) prefix)".to_string(), (i + 1).to_string(), d.to_string()]);
    }
    let depth = profile.last().map_or(0, |x| x.0);
    let mut verdict = VerdictRecord::new("image-defect-grows", "checkpoints |phi(v_i)|", depth, grows(&profile));
    if !verdict.passed() {
        verdict = verdict.with_counterexample(profile_text(&profile));
    }
    report.verdict(verdict);
    Ok(report)
}

// ---------------------------------------------------------------- theorem2

#[derive(Clone, Debug)]
pub struct Theorem2 {
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
}

impl Default for Theorem2 {
    fn default() -> Self {
        Theorem2 { samples: 30, depth: 10_000, seed: DEFAULT_SEED + 2 }
    }
}

/// Projections of ternary episturmian words onto two letters are rich.
pub fn theorem2(p: &Theorem2) -> Result<Report> {
    let mut report = Report::new("theorem2", &["sample", "directive", "subset", "defect"]);
    report.param("samples", p.samples).param("depth", p.depth).param("seed", p.seed);
    let specs = sample_directives(p.seed, 3, p.samples);
    let rows = projection_defects(&specs, &[vec![0], vec![1], vec![2]], &[p.depth])?;
    for (i, spec, subset, profile) in rows {
        for (n, d) in profile {
            report.row(n, [i.to_string(), directive_text(&spec), letters_text(&subset), d.to_string()]);
            report.verdict(VerdictRecord::new(
                "projection-rich",
                format!("{};subset={}", directive_text(&spec), letters_text(&subset)),
                n,
                d == 0,
            ));
        }
    }
    Ok(report)
}

pub fn letters_text(letters: &[Letter]) -> String {
    letters.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

type ProjectionRow = (usize, DirectiveSpec, Vec<Letter>, Vec<(usize, usize)>);

/// Defect profiles of `ζ(u)` for every spec and subset, in input order.
pub fn projection_defects(
    specs: &[DirectiveSpec],
    subsets: &[Vec<Letter>],
    checkpoints: &[usize],
) -> Result<Vec<ProjectionRow>> {
    let jobs: Vec<(usize, &DirectiveSpec, &Vec<Letter>)> =
        specs.iter().enumerate().flat_map(|(i, s)| subsets.iter().map(move |sub| (i, s, sub))).collect();
    jobs.par_iter()
        .map(|&(i, spec, subset)| {
            let zeta = binary_projection(spec.alphabet(), subset)?;
            let mut src = image_source(&zeta, standard_episturmian(spec).boxed())?;
            let profile = defect_profile(&mut src, checkpoints)?;
            Ok((i, spec.clone(), subset.clone(), profile))
        })
        .collect()
}

// ---------------------------------------------------------------- theorem1

#[derive(Clone, Debug)]
pub struct Theorem1 {
    pub words: usize,
    pub checkpoints: Vec<usize>,
    pub seed: u64,
}

impl Default for Theorem1 {
    fn default() -> Self {
        Theorem1 { words: 10, checkpoints: (1..=10).map(|k| k * 10_000).collect(), seed: DEFAULT_SEED + 1 }
    }
}

/// The P_ret test morphisms used on a `k`-letter episturmian word.
pub fn theorem1_morphisms(k: usize) -> Result<Vec<(&'static str, Morphism)>> {
    let alphabet = Alphabet::new(k)?;
    let s = |a: Letter| sigma(a, &alphabet);
    let phi_images = ["0100", "01011", "010111", "0101111"];
    let psi_images: Vec<String> = (0..k).map(|a| format!("1{}", "0".repeat(a + 1))).collect();
    let psi_refs: Vec<&str> = psi_images.iter().map(String::as_str).collect();
    let mut out = vec![
        ("phi", images(&phi_images[..k])),
        ("sigma0.sigma1", s(0)?.compose(&s(1)?)?),
        ("sigma1.sigma0.sigma_last", s(1)?.compose(&s(0)?)?.compose(&s(k as Letter - 1)?)?),
        ("psi", images(&psi_refs)),
    ];
    if k == 2 {
        out.push(("pi", fib_remark_morphism()));
    }
    Ok(out)
}

pub fn theorem1(p: &Theorem1) -> Result<Report> {
    let mut report =
        Report::new("theorem1", &["word", "directive", "morphism", "images", "pret-radius", "profile", "plateau"]);
    report.param("words", p.words).param("seed", p.seed).param("checkpoints", format!("{:?}", p.checkpoints));
    let specs = sample_mixed(p.seed, 2..=4, p.words);
    let mut jobs = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        for (name, m) in theorem1_morphisms(spec.alphabet().size())? {
            jobs.push((i, spec, name, m));
        }
    }
    let results: Vec<Vec<(usize, usize)>> = jobs
        .par_iter()
        .map(|(_, spec, _, m)| {
            let mut src = image_source(m, standard_episturmian(spec).boxed())?;
            Ok(defect_profile(&mut src, &p.checkpoints)?)
        })
        .collect::<Result<_>>()?;
    for ((i, spec, name, m), profile) in jobs.iter().zip(results) {
        let depth = profile.last().map_or(0, |x| x.0);
        let radius = find_pret_radius(m).map_or("-".to_string(), |r| r.to_string());
        let flat = plateaus(&profile);
        report.row(
            depth,
            [
                i.to_string(),
                directive_text(spec),
                name.to_string(),
                m.to_string(),
                radius,
                profile_text(&profile),
                flat.to_string(),
            ],
        );
        let mut v = VerdictRecord::new("defect-plateau", format!("{};{name}", directive_text(spec)), depth, flat);
        if !flat {
            v = v.with_counterexample(profile_text(&profile));
        }
        report.verdict(v);
    }
    Ok(report)
}

// -------------------------------------------------------------- classifier

pub fn classifier() -> Result<Report> {
    let mut report = Report::new("classifier", &["morphism", "class", "radius", "rechecked"]);
    let phi = example3_morphism();
    let pi = fib_remark_morphism();
    let fib = fibonacci_morphism();

    let cases: [(&Morphism, &str, Option<Word>, bool); 2] =
        [(&phi, "010", find_pret_radius(&phi), true), (&pi, "11", find_pret_radius(&pi), true)];
    for (m, expected, found, _) in cases {
        let recheck = found.as_ref().is_some_and(|r| is_pret(m, r));
        let text = found.as_ref().map_or("-".to_string(), Word::to_string);
        report.row(m.max_image_len(), [m.to_string(), "Pret".to_string(), text.clone(), recheck.to_string()]);
        let ok = text == expected && recheck;
        let mut v = VerdictRecord::new("find-pret-radius", format!("{m}; expected {expected}"), 0, ok);
        if !ok {
            let detail = match found {
                Some(_) => format!("found {text}"),
                None => format!("no radius; with r={expected}: {}", pret_failure(m, &Word::digits(expected, 2)?)),
            };
            v = v.with_counterexample(detail);
        }
        report.verdict(v);
    }

    let witness = class_p_witness(&fib);
    let text = witness.as_ref().map_or("-".to_string(), |w| w.radius.to_string());
    let recheck = witness.as_ref().is_some_and(|w| w.recheck(&fib));
    report.row(fib.max_image_len(), [fib.to_string(), "P".to_string(), text.clone(), recheck.to_string()]);
    report.verdict(VerdictRecord::new("class-p-witness", format!("{fib}; expected 0"), 0, text == "0" && recheck));
    Ok(report)
}

// ------------------------------------------------------------------ oracle

#[derive(Clone, Debug)]
pub struct Oracle {
    pub max_word_len: usize,
    pub depth: usize,
    pub max_len: usize,
    pub directives: Vec<String>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_word_len: 14,
            depth: 10_000,
            max_len: 30,
            directives: ["per=01", "per=012", "per=0012", "pre=2;per=01", "per=0123", "pre=10;per=0221", "per=001"]
                .map(String::from)
                .to_vec(),
        }
    }
}

/// `check_rich_crw` against the defect oracle on all short binary words, and
/// `check_rich_bispecial` on episturmian prefixes.
pub fn oracle(p: &Oracle) -> Result<Report> {
    let mut report = Report::new("oracle", &["subject", "examined", "disagreements"]);
    report.param("max-word-len", p.max_word_len).param("max-len", p.max_len);
    let binary = Alphabet::binary();
    for n in 1..=p.max_word_len {
        let bad: Vec<Word> = (0u32..1 << n)
            .into_par_iter()
            .filter_map(|code| {
                let letters = (0..n).rev().map(|i| ((code >> i) & 1) as Letter).collect();
                let w = Word::new(letters, binary.clone()).expect("binary letters");
                let idx = FactorIndex::build(w.clone(), n).expect("depth fits");
                let crw = check_rich_crw(&idx, n).expect("depth fits").verdict.is_pass();
                (crw != (defect(&w) == 0)).then_some(w)
            })
            .collect();
        report.row(n, [format!("binary words of length {n}"), (1u64 << n).to_string(), bad.len().to_string()]);
        let mut v = VerdictRecord::new("crw-equals-defect", format!("length {n}"), n, bad.is_empty());
        if let Some(w) = bad.first() {
            v = v.with_counterexample(w.to_string());
        }
        report.verdict(v);
    }
    let outcomes: Vec<_> = p
        .directives
        .par_iter()
        .map(|d| {
            let spec = parse_directive(d)?;
            let idx = FactorIndex::build(standard_episturmian(&spec).prefix(p.depth), p.max_len + 2)?;
            Ok((d.clone(), check_rich_bispecial(&idx, p.max_len)?))
        })
        .collect::<Result<_>>()?;
    for (d, out) in outcomes {
        report.row(out.depth, [d.clone(), out.examined.to_string(), usize::from(!out.verdict.is_pass()).to_string()]);
        report.verdict(VerdictRecord::from_outcome(format!("{d};maxLen={}", p.max_len), &out));
    }
    Ok(report)
}

// ----------------------------------------------------------------- remark7

#[derive(Clone, Debug)]
pub struct Remark7 {
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
}

impl Default for Remark7 {
    fn default() -> Self {
        Remark7 { samples: 20, depth: 20_000, seed: DEFAULT_SEED + 7 }
    }
}

/// Return-word lengths: pairwise distinct for ternary standard episturmian
/// words, not for the 4-letter directive `01023...`.
pub fn remark7(p: &Remark7) -> Result<Report> {
    let mut report = Report::new("remark7", &["directive", "factor", "return-words", "equal-length-pair"]);
    report.param("samples", p.samples).param("depth", p.depth).param("seed", p.seed);
    let mut specs = vec![DirectiveSpec::periodic(&[0, 1, 2])?];
    specs.extend(sample_directives(p.seed, 3, p.samples));
    let rows: Vec<Vec<(String, String, Option<String>)>> = specs
        .par_iter()
        .map(|spec| {
            let mut src = standard_episturmian(spec);
            return_length_factors(spec)
                .into_iter()
                .map(|w| {
                    let r = return_words(&mut src, &w, p.depth)?;
                    let list: Vec<String> = r.return_words.iter().map(Word::to_string).collect();
                    let pair = equal_length_return_words(&r).map(|(a, b)| format!("{a} {b}"));
                    Ok((w.to_string(), list.join(" "), pair))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    for (spec, rows) in specs.iter().zip(rows) {
        for (w, list, pair) in rows {
            let params = format!("{};w={w}", directive_text(spec));
            report.row(p.depth, [directive_text(spec), w, list, pair.clone().unwrap_or("-".into())]);
            let mut v = VerdictRecord::new("distinct-return-lengths", params, p.depth, pair.is_none());
            if let Some(pair) = pair {
                v = v.with_counterexample(pair);
            }
            report.verdict(v);
        }
    }

    let spec = DirectiveSpec::periodic(&[0, 1, 0, 2, 3])?;
    let w = Word::new(vec![0, 0], spec.alphabet().clone())?;
    let r = return_words(&mut standard_episturmian(&spec), &w, p.depth)?;
    let list: Vec<String> = r.return_words.iter().map(Word::to_string).collect();
    let pair = equal_length_return_words(&r).map(|(a, b)| (a.to_string(), b.to_string()));
    let expected = ("0010201".to_string(), "0010301".to_string());
    report.row(
        p.depth,
        [
            directive_text(&spec),
            w.to_string(),
            list.join(" "),
            pair.as_ref().map_or("-".into(), |(a, b)| format!("{a} {b}")),
        ],
    );
    let both_present = list.contains(&expected.0) && list.contains(&expected.1);
    let flagged = pair.as_ref() == Some(&expected);
    let mut v = VerdictRecord::new(
        "equal-length-return-words",
        format!("{};w=00", directive_text(&spec)),
        p.depth,
        both_present && flagged,
    );
    if !(both_present && flagged) {
        v = v.with_counterexample(format!("return words: {}", list.join(" ")));
    }
    report.verdict(v);
    Ok(report)
}

/// Letters other than `δ_1`, plus `δ_1^ℓ` when `δ_1` recurs after position `ℓ`.
pub fn return_length_factors(spec: &DirectiveSpec) -> Vec<Word> {
    let first = spec.letter(1);
    let mut out: Vec<Word> = spec
        .alphabet()
        .letters()
        .filter(|&a| a != first)
        .map(|a| Word::new(vec![a], spec.alphabet().clone()).expect("letter in alphabet"))
        .collect();
    if let Some(ell) = spec.first_letter_run() {
        let horizon = ell + spec.preperiod().len() + spec.period().len();
        if (ell + 1..=horizon).any(|j| spec.letter(j) == first) {
            out.push(Word::new(vec![first; ell], spec.alphabet().clone()).expect("letter in alphabet"));
        }
    }
    out
}

// ------------------------------------------------------------- s-roundtrip

/// `S(preimage(v, a)) = v` for all binary `v` up to `max_len`; the two
/// preimages differ by the letter exchange.
pub fn s_roundtrip(max_len: usize) -> Result<Report> {
    let mut report = Report::new("s-roundtrip", &["words", "failures"]);
    report.param("max-len", max_len);
    let binary = Alphabet::binary();
    for n in 0..=max_len {
        let mut failures = Vec::new();
        for code in 0u32..1 << n {
            let letters = (0..n).rev().map(|i| ((code >> i) & 1) as Letter).collect();
            let v = Word::new(letters, binary.clone())?;
            let w0 = s_preimage(&v, 0)?;
            let w1 = s_preimage(&v, 1)?;
            let round = s_operator(&w0)? == v && s_operator(&w1)? == v;
            let exchanged = AntimorphismKind::RE.map_letters(w0.letters()) == w1.letters();
            if !(round && exchanged) {
                failures.push(v);
            }
        }
        report.row(n, [(1u64 << n).to_string(), failures.len().to_string()]);
        let mut verdict = VerdictRecord::new("s-roundtrip", format!("length {n}"), n, failures.is_empty());
        if let Some(v) = failures.first() {
            verdict = verdict.with_counterexample(format!("{v:?}"));
        }
        report.verdict(verdict);
    }
    Ok(report)
}

// ------------------------------------------------------------------ prop12

#[derive(Clone, Debug)]
pub struct Prop12 {
    pub directives: Vec<String>,
    pub depth: usize,
    pub n_max: usize,
}

impl Default for Prop12 {
    fn default() -> Self {
        Prop12 {
            directives: ["per=012", "per=0012", "per=021", "pre=1;per=0122", "per=010212", "pre=22;per=0122"]
                .map(String::from)
                .to_vec(),
            depth: 20_000,
            n_max: 50,
        }
    }
}

/// S-preimages of binary projections of ternary Arnoux-Rauzy words are
/// closed under H and reach equality in every row.
pub fn prop12(p: &Prop12) -> Result<Report> {
    let mut report =
        Report::new("prop12", &["directive", "subset", "preimage", "closed", "equal-rows", "first-strict"]);
    report.param("depth", p.depth).param("nmax", p.n_max);
    let mut jobs = Vec::new();
    for d in &p.directives {
        let spec = parse_directive(&format!("{d};k=3"))?;
        for a in 0..3u8 {
            for first in 0..2u8 {
                jobs.push((spec.clone(), a, first));
            }
        }
    }
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(spec, a, first)| {
            let zeta = binary_projection(&ternary(), &[*a])?;
            let projected = image_source(&zeta, standard_episturmian(spec).boxed())?;
            let mut src = s_preimage_source(projected.boxed(), *first)?;
            let idx = FactorIndex::build(src.prefix(p.depth), p.n_max + 1)?;
            Ok(h_profile(&idx, p.n_max))
        })
        .collect::<Result<_>>()?;
    for ((spec, a, first), profile) in jobs.iter().zip(results) {
        let params = format!("{};subset={a};preimage={first}", directive_text(spec));
        match profile {
            Ok(profile) => {
                let equal = profile.rows.iter().filter(|r| r.is_equality()).count();
                let strict = profile.strict_rows();
                report.row(
                    p.depth,
                    [
                        directive_text(spec),
                        a.to_string(),
                        first.to_string(),
                        "true".to_string(),
                        format!("{equal}/{}", profile.rows.len()),
                        strict.first().map_or("-".to_string(), usize::to_string),
                    ],
                );
                report.verdict(VerdictRecord::new("closed-under-H", params.clone(), p.depth, true));
                let mut v = VerdictRecord::new("h-equality", params, p.depth, profile.is_h_rich());
                if let Some(n) = strict.first() {
                    let row = profile.rows[n - 1];
                    v = v.with_counterexample(format!("n={n}: {} > {}", row.lhs, row.rhs));
                }
                report.verdict(v);
            }
            Err(e) => {
                report.row(
                    p.depth,
                    [directive_text(spec), a.to_string(), first.to_string(), "false".into(), "-".into(), "-".into()],
                );
                report.verdict(
                    VerdictRecord::new("closed-under-H", params, p.depth, false).with_counterexample(e.to_string()),
                );
            }
        }
    }
    Ok(report)
}

// ------------------------------------------------------------------ lemmas

#[derive(Clone, Debug)]
pub struct Lemmas {
    pub samples: usize,
    pub extra: Vec<String>,
    pub depth: usize,
    pub max_len: usize,
    pub seed: u64,
}

impl Default for Lemmas {
    fn default() -> Self {
        Lemmas {
            samples: 7,
            extra: vec!["pre=2;per=01;k=3".into(), "pre=012;per=01;k=3".into(), "pre=12;per=0;k=3".into()],
            depth: 10_000,
            max_len: 12,
            seed: DEFAULT_SEED + 9,
        }
    }
}

fn all_subsets_containing(k: usize, a: Letter) -> Vec<Vec<Letter>> {
    (1..1u32 << k)
        .filter(|mask| mask & (1 << a) != 0)
        .map(|mask| (0..k as Letter).filter(|&b| mask & (1 << b) != 0).collect())
        .collect()
}

/// Letter-gap and E-extension palindromicity on episturmian samples, for
/// every proper letter subset and every palindromic factor `w` up to
/// `max_len` with every admissible letter set. Factors without a unique
/// extension letter (possible in periodic words) are counted as skipped.
pub fn lemmas(p: &Lemmas) -> Result<Report> {
    let mut report = Report::new("lemmas", &["directive", "check", "cases", "windows", "skipped"]);
    report.param("samples", p.samples).param("depth", p.depth).param("max-len", p.max_len).param("seed", p.seed);
    let mut specs = sample_mixed(p.seed, 2..=4, p.samples);
    for d in &p.extra {
        specs.push(parse_directive(d)?);
    }
    let results: Vec<_> = specs
        .par_iter()
        .map(|spec| {
            let idx = FactorIndex::build(standard_episturmian(spec).prefix(p.depth), p.max_len)?;
            let k = spec.alphabet().size();
            let mut gap = (0, 0, None);
            for subset in proper_subsets(k) {
                let out = letter_gap_palindromicity(&idx, &subset)?;
                gap.0 += 1;
                gap.1 += out.examined;
                if gap.2.is_none() && !out.verdict.is_pass() {
                    gap.2 = Some((letters_text(&subset), out));
                }
            }
            let (mut ext, mut skipped) = ((0, 0, None), 0);
            for n in 0..=p.max_len {
                for f in idx.factors(n)?.filter(|f| is_palindrome(f)) {
                    let w = idx.word(f);
                    let a = match palindromic_extension_letter(&idx, &w) {
                        Ok(a) => a,
                        Err(epiword::Error::PreconditionViolation(_)) => {
                            skipped += 1;
                            continue;
                        }
                        Err(e) => return Err(e.into()),
                    };
                    for e_set in all_subsets_containing(k, a) {
                        let out = e_extension_palindromicity(&idx, &w, &e_set, a)?;
                        ext.0 += 1;
                        ext.1 += out.examined;
                        if ext.2.is_none() && !out.verdict.is_pass() {
                            ext.2 = Some((format!("w={w};E={};a={a}", letters_text(&e_set)), out));
                        }
                    }
                }
            }
            Ok((gap, ext, skipped))
        })
        .collect::<Result<_>>()?;
    for (spec, (gap, ext, skipped)) in specs.iter().zip(results) {
        let d = directive_text(spec);
        report.row(p.depth, [d.clone(), "letter-gap".into(), gap.0.to_string(), gap.1.to_string(), "0".into()]);
        report
            .row(p.depth, [d.clone(), "e-extension".into(), ext.0.to_string(), ext.1.to_string(), skipped.to_string()]);
        match gap.2 {
            None => report.verdict(VerdictRecord::new("letter-gap", format!("{d};all proper subsets"), p.depth, true)),
            Some((subset, out)) => report.verdict(VerdictRecord::from_outcome(format!("{d};subset={subset}"), &out)),
        }
        match ext.2 {
            None => {
                report.verdict(VerdictRecord::new("e-extension", format!("{d};all admissible"), p.depth, ext.0 > 0))
            }
            Some((params, out)) => report.verdict(VerdictRecord::from_outcome(format!("{d};{params}"), &out)),
        }
    }
    Ok(report)
}
