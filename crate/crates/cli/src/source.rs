//! Building a prefix source from command-line flags: a base word, then an
//! optional morphic image, an optional binary projection and an optional
//! S-preimage.

use clap::Args;
use epiword::generators::{
    example3_word, fixed_point, image_source, periodic_source, s_preimage_source, standard_episturmian,
};
use epiword::morphisms::binary_projection;
use epiword::{DirectiveSpec, Letter, PrefixSource, Word};

use crate::parse::{parse_directive, parse_fixed_point, parse_letters, parse_morphism};
use crate::{usage, Result};

#[derive(Args, Clone, Debug, Default)]
pub struct SourceArgs {
    /// Standard episturmian word, e.g. "seed=;pre=2;per=01"
    #[arg(long)]
    pub directive: Option<String>,
    /// Periodic word p^ω given by its period, e.g. "01"
    #[arg(long)]
    pub periodic: Option<String>,
    /// Fixed point of a morphism, e.g. "0:01,1:0" or "0:01,1:0@0"
    #[arg(long)]
    pub fixed_point: Option<String>,
    /// The ternary rich word v = lim v_i
    #[arg(long)]
    pub example3: bool,
    /// Apply this morphism to the base word, e.g. "0:0100,1:01011,2:010111"
    #[arg(long)]
    pub morphism: Option<String>,
    /// Project onto {A, B}: letters in the subset map to A
    #[arg(long)]
    pub subset: Option<String>,
    /// Replace the (binary) word by its S-preimage starting with this letter
    #[arg(long)]
    pub preimage: Option<Letter>,
}

/// `spec` in canonical text form, with an explicit alphabet size.
pub fn directive_text(spec: &DirectiveSpec) -> String {
    format!("{spec};k={}", spec.alphabet().size())
}

impl SourceArgs {
    pub fn directive(text: &str) -> Self {
        SourceArgs { directive: Some(text.to_string()), ..Default::default() }
    }

    pub fn build(&self) -> Result<Box<dyn PrefixSource>> {
        let bases = [self.directive.is_some(), self.periodic.is_some(), self.fixed_point.is_some(), self.example3];
        let mut src: Box<dyn PrefixSource> = match bases.iter().filter(|&&b| b).count() {
            0 => return usage("choose one of --directive, --periodic, --fixed-point, --example3"),
            1 => self.base()?,
            _ => return usage("--directive, --periodic, --fixed-point and --example3 are exclusive"),
        };
        if let Some(m) = &self.morphism {
            src = image_source(&parse_morphism(m)?, src)?.boxed();
        }
        if let Some(subset) = &self.subset {
            let zeta = binary_projection(src.alphabet(), &parse_letters(subset)?)?;
            src = image_source(&zeta, src)?.boxed();
        }
        if let Some(a) = self.preimage {
            src = s_preimage_source(src, a)?.boxed();
        }
        Ok(src)
    }

    fn base(&self) -> Result<Box<dyn PrefixSource>> {
        if let Some(d) = &self.directive {
            return Ok(standard_episturmian(&parse_directive(d)?).boxed());
        }
        if let Some(p) = &self.periodic {
            let letters = crate::parse::digits(p)?;
            let k = letters.iter().copied().max().unwrap_or(0) as usize + 1;
            let word = Word::new(letters, epiword::Alphabet::new(k)?)?;
            return Ok(periodic_source(&word)?.boxed());
        }
        if let Some(f) = &self.fixed_point {
            let (m, a) = parse_fixed_point(f)?;
            return Ok(fixed_point(&m, a)?.boxed());
        }
        Ok(example3_word().boxed())
    }

    /// Echo of the flags that define the source, in a fixed order.
    pub fn describe(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut push = |k: &str, v: &Option<String>| {
            if let Some(v) = v {
                out.push((k.to_string(), v.clone()));
            }
        };
        push("directive", &self.directive);
        push("periodic", &self.periodic);
        push("fixed-point", &self.fixed_point);
        push("morphism", &self.morphism);
        push("subset", &self.subset);
        if self.example3 {
            out.insert(0, ("example3".to_string(), "true".to_string()));
        }
        if let Some(a) = self.preimage {
            out.push(("preimage".to_string(), a.to_string()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipelines() {
        let mut s = SourceArgs::directive("per=01").build().unwrap();
        assert_eq!(s.prefix(10).to_string(), "0100101001");
        let args = SourceArgs { periodic: Some("01".into()), ..Default::default() };
        assert_eq!(args.build().unwrap().prefix(4).to_string(), "0101");
        let args = SourceArgs { example3: true, ..Default::default() };
        assert_eq!(args.build().unwrap().prefix(10).to_string(), "0110220110");
        let args = SourceArgs { directive: Some("per=012".into()), subset: Some("1".into()), ..Default::default() };
        assert_eq!(args.build().unwrap().prefix(7).to_string(), "BABBBAB");
        assert!(SourceArgs::default().build().is_err());
    }
}
