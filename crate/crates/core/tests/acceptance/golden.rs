//! Worked examples: diagrams, strands, sequences, orientations, order sets.

use std::collections::BTreeSet;

use klcap::capcurl::{copair_orient, pair_orient};
use klcap::{
    arrow_diagram, cap_diagram, cocap_diagram, lambda_s, split_sequences, weight_leq, weight_of_diagram, GroupConfig,
    Orientation, StrandKind, Weight,
};

use crate::Tally;

fn w(text: &str) -> Weight {
    text.parse().expect("weight literal")
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| w(s).to_string()).collect()
}

fn ends(c: &klcap::CapCurlDiagram, kind: StrandKind) -> Vec<(usize, usize)> {
    c.strands()
        .iter()
        .filter(|s| s.kind == kind)
        .map(|s| (s.left + 1, s.right + 1))
        .collect()
}

pub fn diagrams() -> Tally {
    let mut t = Tally::default();
    let gl5 = GroupConfig::gl(5, 5, 1, 1).unwrap();
    for (lam, want) in [("[4|4]", "oo∨o∧"), ("[2|4]", "oo×oo")] {
        let got = arrow_diagram(&w(lam), &gl5).unwrap().arrow_string();
        t.check(got == want, || format!("GL p=5 {lam}: {got}"));
    }
    let sp5 = GroupConfig::sp(5, 7, 2).unwrap();
    let got = arrow_diagram(&w("(1,1)"), &sp5).unwrap().arrow_string();
    t.check(got == "oo×", || format!("Sp p=5 (1^2): {got}"));
    let d = arrow_diagram(&w("(3,2)"), &sp5).unwrap();
    let other = d.with_node(0, d.node(0).flipped());
    let strings: BTreeSet<String> = [d.arrow_string(), other.arrow_string()].into();
    t.check(
        strings == BTreeSet::from(["∨o∨".to_string(), "∧o∨".to_string()]),
        || format!("Sp p=5 (3,2): {strings:?}"),
    );
    t.check(
        d.node(0).is_single() && weight_of_diagram(&other, &sp5).ok() == Some(w("(3,2)")),
        || "both zero arrows of (3,2) give the same weight".into(),
    );

    let gl17 = GroupConfig::gl(17, 20, 8, 7).unwrap();
    let big = w("[9,6,5,4,4,2|8,8,4,3,3,2]");
    let c = cap_diagram(&big, &gl17).unwrap();
    let caps = ends(&c, StrandKind::Cap);
    t.check(
        caps == [(4, 5), (6, 11), (7, 8), (16, 17)] && ends(&c, StrandKind::Curl).is_empty(),
        || format!("GL p=17 caps {caps:?}"),
    );
    let sp23 = GroupConfig::sp(23, 17, 12).unwrap();
    let big_sp = w("(11^6,10,6,4,4,1)");
    let c = cap_diagram(&big_sp, &sp23).unwrap();
    let (caps, curls) = (ends(&c, StrandKind::Cap), ends(&c, StrandKind::Curl));
    t.check(caps == [(1, 2), (8, 9)] && curls == [(4, 5), (11, 12)], || {
        format!("Sp p=23 caps {caps:?}, curls {curls:?}")
    });

    for (cfg, lam, want) in [(gl17, &big, "(∧∧∨∧∨∨∧∧∨, ∧∨∨∧)"), (sp23, &big_sp, "(∨∧∧∧∧, ∧∧∨∧∨)")]
    {
        let got = split_sequences(&arrow_diagram(lam, &cfg).unwrap()).to_string();
        t.check(got == want, || format!("sequences of {lam}: {got}"));
    }
    t
}

fn oriented(o: Orientation) -> bool {
    matches!(o, Orientation::Oriented(_))
}

pub fn orientations() -> Tally {
    let mut t = Tally::default();
    let gl = GroupConfig::gl(5, 7, 2, 3).unwrap();
    let lam = w("[3,2|2,1,1]");
    let c = cap_diagram(&lam, &gl).unwrap();
    let below = ["[2,2|1,1,1]", "[3,1|2,1]", "[2,1|1,1]", "[3|2]", "[2|1]"];
    let got: BTreeSet<String> = below
        .iter()
        .filter(|m| oriented(pair_orient(&c, &w(m), &gl).unwrap()))
        .map(|m| w(m).to_string())
        .collect();
    t.check(got == set(&below[..3]), || format!("GL c_λμ oriented for {got:?}"));

    let sp = GroupConfig::sp(11, 7, 5).unwrap();
    let lam = w("(6,6,6,3,2)");
    let c = cap_diagram(&lam, &sp).unwrap();
    let below = [
        "(6,6,6,2,1)",
        "(6,5,5,3,2)",
        "(6,5,5,2,1)",
        "(5,5,4,3,2)",
        "(5,5,4,2,1)",
        "(4,4,4,3,2)",
        "(4,4,4,2,1)",
    ];
    let got: BTreeSet<String> = below
        .iter()
        .filter(|m| oriented(pair_orient(&c, &w(m), &sp).unwrap()))
        .map(|m| w(m).to_string())
        .collect();
    t.check(got == set(&below[..3]), || format!("Sp c_λμ oriented for {got:?}"));

    for (cfg, mu, yes, no) in [
        (sp, "(4,4,4,2,1)", "(5,5,4,3,2)", "(6,6,6,3,2)"),
        (gl, "[2|1]", "[3,1|2,1]", "[3,2|2,1,1]"),
    ] {
        let co = cocap_diagram(&w(mu), &cfg).unwrap();
        let a = oriented(copair_orient(&co, &w(yes), &cfg).unwrap());
        let b = oriented(copair_orient(&co, &w(no), &cfg).unwrap());
        t.check(a && !b, || format!("co_{mu}: {yes} oriented {a}, {no} oriented {b}"));
    }
    t
}

pub fn order_sets() -> Tally {
    let mut t = Tally::default();
    for (cfg, lam, want) in [
        (
            GroupConfig::gl(5, 7, 2, 3).unwrap(),
            "[3,2|2,1,1]",
            set(&["[2,2|1,1,1]", "[3,1|2,1]", "[2,1|1,1]", "[3|2]", "[2|1]"]),
        ),
        (
            GroupConfig::sp(11, 7, 5).unwrap(),
            "(6,6,6,3,2)",
            set(&[
                "(6,6,6,2,1)",
                "(6,5,5,3,2)",
                "(6,5,5,2,1)",
                "(5,5,4,3,2)",
                "(5,5,4,2,1)",
                "(4,4,4,3,2)",
                "(4,4,4,2,1)",
            ]),
        ),
    ] {
        let lam = w(lam);
        let got: BTreeSet<String> = lambda_s(&cfg)
            .into_iter()
            .filter(|m| *m != lam && weight_leq(m, &lam, &cfg).unwrap())
            .map(|m| m.to_string())
            .collect();
        t.check(got == want, || format!("μ ≺ {lam}: {got:?}"));
    }
    t
}
