//! Text forms accepted on the command line.
//!
//! * directive: `seed=<digits>;pre=<digits>;per=<digits>` (seed and pre are
//!   optional, `k=<n>` fixes the alphabet size)
//! * morphism: `0:0100,1:01011,2:010111`
//! * letter sets: `0,2` or `02`
//! * checkpoints: `1000,2000,1e5`

use epiword::morphisms::Morphism;
use epiword::{Alphabet, DirectiveSpec, Letter};

use crate::{usage, Result};

/// Letters of a digit string, in order.
pub fn digits(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .map(|c| match c.to_digit(36) {
            Some(d) => Ok(d as Letter),
            None => usage(format!("{c:?} is not a letter digit")),
        })
        .collect()
}

pub fn parse_directive(text: &str) -> Result<DirectiveSpec> {
    let (mut seed, mut pre, mut per, mut k) = (Vec::new(), Vec::new(), None, None);
    for field in text.split(';').map(str::trim).filter(|f| !f.is_empty()) {
        let Some((key, value)) = field.split_once('=') else {
            return usage(format!("directive field {field:?} is not key=value"));
        };
        match key.trim() {
            "seed" => seed = digits(value.trim())?,
            "pre" => pre = digits(value.trim())?,
            "per" => per = Some(digits(value.trim())?),
            "k" => k = Some(parse_count(value)?),
            other => return usage(format!("unknown directive field {other:?}")),
        }
    }
    let Some(per) = per else {
        return usage("directive needs a per=<digits> field");
    };
    Ok(match k {
        Some(k) => DirectiveSpec::with_alphabet(&seed, &pre, &per, Alphabet::new(k)?)?,
        None => DirectiveSpec::new(&seed, &pre, &per)?,
    })
}

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut images: Vec<Option<&str>> = Vec::new();
    for part in text.split(',').map(str::trim) {
        let Some((letter, image)) = part.split_once(':') else {
            return usage(format!("morphism entry {part:?} is not letter:image"));
        };
        let [a] = digits(letter.trim())?[..] else {
            return usage(format!("{letter:?} is not a single letter"));
        };
        let a = a as usize;
        if images.len() <= a {
            images.resize(a + 1, None);
        }
        if images[a].replace(image.trim()).is_some() {
            return usage(format!("letter {a} has two images"));
        }
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(a, img)| img.ok_or_else(|| crate::CliError::Usage(format!("letter {a} has no image"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism::parse_images(&images)?)
}

/// A morphism whose fixed point starts with the given letter:
/// `0:01,1:0` (starts at 0) or `0:01,1:0@1`.
pub fn parse_fixed_point(text: &str) -> Result<(Morphism, Letter)> {
    let (m, start) = match text.rsplit_once('@') {
        Some((m, s)) => (m, digits(s.trim())?),
        None => (text, vec![0]),
    };
    let [a] = start[..] else {
        return usage("fixed point start must be one letter");
    };
    Ok((parse_morphism(m)?, a))
}

pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let mut out = digits(&text.replace([',', ' '], ""))?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn parse_count(text: &str) -> Result<usize> {
    let text = text.trim();
    if let Ok(n) = text.parse() {
        return Ok(n);
    }
    if let Some((m, e)) = text.split_once(['e', 'E']) {
        if let (Ok(m), Ok(e)) = (m.parse::<usize>(), e.parse::<u32>()) {
            if let Some(n) = 10usize.checked_pow(e).and_then(|p| p.checked_mul(m)) {
                return Ok(n);
            }
        }
    }
    usage(format!("{text:?} is not a count"))
}

/// Comma-separated, strictly increasing.
pub fn parse_checkpoints(text: &str) -> Result<Vec<usize>> {
    let out = text.split(',').map(parse_count).collect::<Result<Vec<_>>>()?;
    if out.windows(2).any(|p| p[0] >= p[1]) {
        return usage("checkpoints must be strictly increasing");
    }
    Ok(out)
}

/// Prefix lengths for a defect profile, as one command-line value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoints(pub Vec<usize>);

impl std::str::FromStr for Checkpoints {
    type Err = crate::CliError;

    fn from_str(text: &str) -> Result<Self> {
        parse_checkpoints(text).map(Checkpoints)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directive_round_trip() {
        let d = parse_directive("seed=;pre=2;per=01").unwrap();
        assert_eq!(d.preperiod(), &[2]);
        assert_eq!(d.period(), &[0, 1]);
        assert_eq!(d.alphabet().size(), 3);
        assert_eq!(parse_directive(&d.to_string()).unwrap(), d);
        assert_eq!(parse_directive("per=01;k=4").unwrap().alphabet().size(), 4);
        assert!(parse_directive("pre=01").is_err());
        assert!(parse_directive("per=01;x=1").is_err());
    }

    #[test]
    fn morphism_forms() {
        let m = parse_morphism("1:01011,0:0100,2:010111").unwrap();
        assert_eq!(m.to_string(), "0:0100,1:01011,2:010111");
        assert!(parse_morphism("0:01,0:1").is_err());
        assert!(parse_morphism("0:01,2:1").is_err());
        let (f, a) = parse_fixed_point("0:01,1:0@1").unwrap();
        assert_eq!((f.images().len(), a), (2, 1));
    }

    #[test]
    fn counts_and_sets() {
        assert_eq!(parse_count("1e5").unwrap(), 100_000);
        assert_eq!(parse_count("2e4").unwrap(), 20_000);
        assert_eq!(parse_checkpoints("10,1e2").unwrap(), vec![10, 100]);
        assert!(parse_checkpoints("10,10").is_err());
        assert_eq!(parse_letters("2,0").unwrap(), vec![0, 2]);
    }
}
