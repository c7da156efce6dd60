//! Stable tables across the two smallest admissible primes and against characteristic 0.

use klcap::limits::{char0_compare, min_prime, next_prime, stability_check, LimitConfig};

use crate::Tally;

fn configs() -> Vec<LimitConfig> {
    let mut out = Vec::new();
    for delta in -1..=1 {
        for r1 in 0..=2 {
            for r2 in 0..=2 {
                for s1 in 1..=2 {
                    for s2 in 1..=2 {
                        out.push(LimitConfig::gl(delta, r1, r2, s1, s2).unwrap());
                    }
                }
            }
        }
    }
    for delta in -2..=2 {
        for r in 0..=2 {
            for s in 1..=2 {
                out.push(LimitConfig::sp(delta, r, s).unwrap());
            }
        }
    }
    out
}

pub fn stability() -> Tally {
    let mut t = Tally::default();
    for lc in configs() {
        let p = min_prime(&lc);
        match stability_check(&lc, p, next_prime(&lc, p)) {
            Ok(r) => t.check(r.is_stable(), || format!("{lc}: {}", r.mismatches[0])),
            Err(e) => t.check(false, || format!("{lc}: {e}")),
        }
        match char0_compare(&lc) {
            Ok(r) => t.check(r.agrees(), || {
                format!("{lc} against characteristic 0: {}", r.mismatches[0])
            }),
            Err(e) => t.check(false, || format!("{lc}: {e}")),
        }
    }
    t
}
