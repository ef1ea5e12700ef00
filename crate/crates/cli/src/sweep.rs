//! Randomized sweep over `k`-letter episturmian words and every proper
//! nonempty letter subset: the binary projection should have defect 0.
//! `k = 3` runs the ternary projection experiment instead.

use epiword::Letter;

use crate::experiments::{letters_text, projection_defects, theorem2, Theorem2};
use crate::report::{Report, VerdictRecord};
use crate::sample::sample_directives;
use crate::source::directive_text;
use crate::{usage, Result};

#[derive(Clone, Debug)]
pub struct Sweep {
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub checkpoints: Vec<usize>,
}

pub fn proper_subsets(k: usize) -> Vec<Vec<Letter>> {
    (1..(1u64 << k) - 1).map(|mask| (0..k as Letter).filter(|&a| mask & (1 << a) != 0).collect()).collect()
}

pub fn sweep(p: &Sweep) -> Result<Report> {
    let Some(&depth) = p.checkpoints.last() else {
        return usage("at least one checkpoint is needed");
    };
    if p.k == 3 {
        return theorem2(&Theorem2 { samples: p.samples, depth, seed: p.seed });
    }
    if !(4..=12).contains(&p.k) {
        return usage(format!("k must be 3 or in 4..=12, got {}", p.k));
    }
    let mut report = Report::new("sweep", &["sample", "directive", "subset", "defect"]);
    report
        .param("k", p.k)
        .param("samples", p.samples)
        .param("seed", p.seed)
        .param("checkpoints", format!("{:?}", p.checkpoints));
    let specs = sample_directives(p.seed, p.k, p.samples);
    for (i, spec, subset, profile) in projection_defects(&specs, &proper_subsets(p.k), &p.checkpoints)? {
        let params = format!("{};subset={};seed={};sample={i}", directive_text(&spec), letters_text(&subset), p.seed);
        for &(n, d) in &profile {
            report.row(n, [i.to_string(), directive_text(&spec), letters_text(&subset), d.to_string()]);
        }
        let bad = profile.iter().find(|&&(_, d)| d != 0);
        let depth = profile.last().map_or(0, |x| x.0);
        let mut v = VerdictRecord::new("projection-rich", params, depth, bad.is_none());
        if let Some((n, d)) = bad {
            v = v.with_counterexample(format!("defect {d} at prefix length {n}"));
        }
        report.verdict(v);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let r = sweep(&Sweep { k: 4, samples: 2, seed: 1, checkpoints: vec![500, 1000] }).unwrap();
        assert_eq!(r.verdicts.len(), 2 * 14);
        assert!(r.passed());
        let r = sweep(&Sweep { k: 3, samples: 1, seed: 1, checkpoints: vec![1000] }).unwrap();
        assert_eq!(r.experiment, "theorem2");
        assert!(sweep(&Sweep { k: 2, samples: 1, seed: 1, checkpoints: vec![10] }).is_err());
    }
}
