//! Verification suites behind `dfv verify`.

use std::collections::BTreeSet;
use std::io::Write;

use rayon::prelude::*;
use serde_json::json;

use dfv_core::ci::{is_symplectic, sigma};
use dfv_core::finiteness::{classify_table, is_finite_bruteforce, is_finite_fast, JointTriple, ParabolicShape};
use dfv_core::oracle::nilpotency::{check_counterexample, run_suite};
use dfv_core::oracle::{hom_dim, oracle_phi_k, oracle_phi_s, Sampling};
use dfv_core::orbit::{
    closure_leq, count_partial_permutations, count_permutation_descents, dim_variety, enumerate_orbits,
    StackedPartialPermutation,
};
use dfv_core::steinberg::{fiber, grs, grs_inverse, phi_k, phi_s, GrsQuintuple};
use dfv_core::young::Partition;

use crate::{CmdResult, Suite, Usage, VerifyArgs};

struct Report<'a> {
    out: &'a mut dyn Write,
    suite: &'static str,
    ok: bool,
}

impl Report<'_> {
    fn check(&mut self, name: &str, pass: bool, detail: String) {
        self.ok &= pass;
        let rec = json!({"suite": self.suite, "check": name, "pass": pass, "detail": detail});
        writeln!(self.out, "{rec}").expect("write output");
    }
}

fn orbits_upto(pmax: usize, qmax: usize) -> Vec<StackedPartialPermutation> {
    let mut out = Vec::new();
    for p in 0..=pmax {
        for q in 0..=qmax {
            for r in 1..=p + q {
                out.extend(enumerate_orbits(p, q, r).expect("valid sizes"));
            }
        }
    }
    out
}

fn first_or_none(v: &[String]) -> String {
    v.first().cloned().unwrap_or_else(|| "none".into())
}

fn oracle(rep: &mut Report, a: &VerifyArgs) {
    let s = Sampling { seed: a.seed, trials: a.trials, bound: a.bound };
    let orbits = orbits_upto(a.pmax, a.qmax);
    let results: Vec<(bool, bool, Option<String>)> = orbits
        .par_iter()
        .map(|w| {
            let k = oracle_phi_k(w, s);
            let d = oracle_phi_s(w, s);
            match (k, d) {
                (Ok(k), Ok(d)) => (k == phi_k(w), phi_s(w).ok() == Some(d), None),
                (k, d) => (false, false, Some(format!("{w}: {:?} {:?}", k.err(), d.err()))),
            }
        })
        .collect();
    let bad = |f: fn(&(bool, bool, Option<String>)) -> bool| -> Vec<String> {
        orbits.iter().zip(&results).filter(|(_, r)| !f(r)).map(|(w, _)| w.to_string()).collect()
    };
    let errors: Vec<String> = results.iter().filter_map(|r| r.2.clone()).collect();
    rep.check("oracle_errors", errors.is_empty(), format!("{} errors, first {}", errors.len(), first_or_none(&errors)));
    let k = bad(|r| r.0);
    rep.check(
        "phi_k",
        k.is_empty(),
        format!("{} orbits, {} mismatches, first {}", orbits.len(), k.len(), first_or_none(&k)),
    );
    let sd = bad(|r| r.1);
    rep.check(
        "phi_s",
        sd.is_empty(),
        format!("{} orbits, {} mismatches, first {}", orbits.len(), sd.len(), first_or_none(&sd)),
    );
}

fn closure(rep: &mut Report, a: &VerifyArgs) {
    let orbits = orbits_upto(a.pmax, a.qmax);
    let bad: Vec<String> = orbits
        .par_iter()
        .filter(|w| w.dim_orbit() + hom_dim(w) != w.p() * w.p() + w.q() * w.q())
        .map(|w| w.to_string())
        .collect();
    rep.check(
        "dimension_identity",
        bad.is_empty(),
        format!("{} orbits, first mismatch {}", orbits.len(), first_or_none(&bad)),
    );
    let mut poset_ok = true;
    let mut detail = String::from("ok");
    'outer: for p in 0..=a.pmax {
        for q in 0..=a.qmax {
            for r in 1..=p + q {
                let o = enumerate_orbits(p, q, r).expect("valid sizes");
                let n = o.len();
                let leq: Vec<Vec<bool>> =
                    o.iter().map(|x| o.iter().map(|y| closure_leq(x, y).expect("same sizes")).collect()).collect();
                let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(leq[i][j] && leq[j][i])));
                let trans = (0..n).all(|i| (0..n).all(|j| !leq[i][j] || (0..n).all(|k| !leq[j][k] || leq[i][k])));
                let tops: Vec<usize> = (0..n).filter(|&j| (0..n).all(|i| leq[i][j])).collect();
                let top_ok = tops.len() == 1 && o[tops[0]].dim_orbit() == dim_variety(p, q, r);
                if !(antisym && trans && top_ok) {
                    poset_ok = false;
                    detail =
                        format!("({p},{q},{r}): antisymmetric {antisym}, transitive {trans}, dense orbit {top_ok}");
                    break 'outer;
                }
            }
        }
    }
    rep.check("partial_order", poset_ok, detail);
}

fn grs_suite(rep: &mut Report, a: &VerifyArgs) {
    let mut injective = true;
    let mut fibers_ok = true;
    let mut inverse_ok = true;
    let mut total = 0;
    for p in 0..=a.pmax {
        for q in 0..=a.qmax {
            for r in 1..=p + q {
                let orbits = enumerate_orbits(p, q, r).expect("valid sizes");
                let images: BTreeSet<GrsQuintuple> = orbits.iter().map(grs).collect();
                injective &= images.len() == orbits.len();
                let mut all = BTreeSet::new();
                for l in Partition::all_of(p) {
                    for m in Partition::all_of(q) {
                        all.extend(fiber(&l, &m, r));
                    }
                }
                fibers_ok &= all == images;
                inverse_ok &= orbits.iter().all(|w| grs_inverse(&grs(w), p, q, r).as_ref() == Ok(w));
                total += orbits.len();
            }
        }
    }
    rep.check("injective", injective, format!("{total} orbits"));
    rep.check("fiber_sums", fibers_ok, "image equals the union of fibers".into());
    rep.check("inverse", inverse_ok, "grs_inverse . grs = id".into());
}

fn nilpotency(rep: &mut Report, a: &VerifyArgs) {
    for r in run_suite(a.seed, a.instances) {
        rep.check(
            &format!("case_{}", r.case),
            r.failures == 0 && r.precondition_errors == 0,
            format!(
                "{} instances, {} failures, {} precondition errors",
                r.instances, r.failures, r.precondition_errors
            ),
        );
    }
    let c = check_counterexample();
    rep.check(
        "counterexample",
        c.confirms(),
        format!(
            "y^4 = 0: {}, theta part cubed = 0: {}, anti part nilpotent: {}",
            c.y_fourth_power_zero, c.theta_cube_zero, c.anti_part_nilpotent
        ),
    );
}

fn ci(rep: &mut Report, a: &VerifyArgs) {
    let nmax = a.nmax.unwrap_or(3);
    for n in 1..=nmax {
        let orbits = enumerate_orbits(n, n, n).expect("valid sizes");
        let mut fixed_ok = true;
        let mut invol = true;
        let mut count = 0;
        for w in &orbits {
            let s = match sigma(w) {
                Ok(s) => s,
                Err(e) => {
                    rep.check("completion", false, e.to_string());
                    return;
                }
            };
            invol &= sigma(&s).as_ref() == Ok(w);
            let sym = is_symplectic(w).expect("p = q = r");
            fixed_ok &= (s == *w) == sym;
            count += usize::from(sym);
        }
        rep.check(&format!("n{n}_fixed_points"), fixed_ok, format!("{count} symmetric of {}", orbits.len()));
        rep.check(&format!("n{n}_involution"), invol, String::new());
        if n == 1 {
            rep.check("n1_count", count == 3, format!("{count}"));
        }
    }
}

fn classifier(rep: &mut Report, a: &VerifyArgs) {
    let nmax = a.nmax.unwrap_or(8);
    for n in 1..=nmax {
        let ts = JointTriple::all_of(n);
        let fb: Vec<String> =
            ts.par_iter().filter(|t| is_finite_fast(t) != is_finite_bruteforce(t)).map(|t| t.to_string()).collect();
        rep.check(
            &format!("n{n}_fast_vs_bruteforce"),
            fb.is_empty(),
            format!("{} triples, first disagreement {}", ts.len(), first_or_none(&fb)),
        );
        let tf: Vec<String> = ts
            .par_iter()
            .filter(|t| classify_table(&ParabolicShape::of(t)) != is_finite_fast(t))
            .map(|t| t.to_string())
            .collect();
        rep.check(&format!("n{n}_table_vs_fast"), tf.is_empty(), format!("first disagreement {}", first_or_none(&tf)));
    }
}

fn counting(rep: &mut Report, a: &VerifyArgs) {
    let nmax = a.nmax.unwrap_or(5);
    for n in 0..=nmax {
        let x = count_partial_permutations(n, n);
        let y = count_permutation_descents(n);
        rep.check(
            &format!("n{n}"),
            x == y,
            format!("{x} partial permutations, {y} (permutation, decreasing subsequence) pairs"),
        );
    }
}

pub fn run(out: &mut dyn Write, a: &VerifyArgs) -> CmdResult {
    if a.trials == 0 || a.bound <= 0 {
        return Err(Usage("trials and bound must be positive".into()));
    }
    let name = match a.suite {
        Suite::Oracle => "oracle",
        Suite::Closure => "closure",
        Suite::Grs => "grs",
        Suite::Nilpotency => "nilpotency",
        Suite::Ci => "ci",
        Suite::Classifier => "classifier",
        Suite::Counting => "counting",
    };
    let mut rep = Report { out, suite: name, ok: true };
    match a.suite {
        Suite::Oracle => oracle(&mut rep, a),
        Suite::Closure => closure(&mut rep, a),
        Suite::Grs => grs_suite(&mut rep, a),
        Suite::Nilpotency => nilpotency(&mut rep, a),
        Suite::Ci => ci(&mut rep, a),
        Suite::Classifier => classifier(&mut rep, a),
        Suite::Counting => counting(&mut rep, a),
    }
    let ok = rep.ok;
    let summary = json!({"suite": name, "pass": ok});
    writeln!(rep.out, "{summary}").expect("write output");
    Ok(ok)
}
