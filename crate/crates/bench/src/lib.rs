//! Benchmark fixtures.

use klcap::limits::LimitConfig;
use klcap::poly::SeqClass;
use klcap::{Flavor, GroupConfig, Orbit, SearchBudget, Weight};

/// A block and one of its weights.
pub struct OrbitFixture {
    pub name: &'static str,
    pub cfg: GroupConfig,
    pub weight: Weight,
}

impl OrbitFixture {
    pub fn orbit(&self) -> Orbit {
        Orbit::of(&self.weight, &self.cfg, &SearchBudget::default()).expect("fixture orbit")
    }
}

pub fn orbits() -> Vec<OrbitFixture> {
    vec![
        OrbitFixture {
            name: "gl_p5",
            cfg: GroupConfig::gl(5, 7, 2, 3).unwrap(),
            weight: "[3,2|2,1,1]".parse().unwrap(),
        },
        OrbitFixture {
            name: "sp_p11",
            cfg: GroupConfig::sp(11, 7, 5).unwrap(),
            weight: "(6,6,6,3,2)".parse().unwrap(),
        },
        OrbitFixture {
            name: "gl_p13",
            cfg: GroupConfig::gl(13, 10, 5, 5).unwrap(),
            weight: "[8,6,4,2|7,5,3,1]".parse().unwrap(),
        },
    ]
}

pub fn seq_classes() -> Vec<SeqClass> {
    [(6, 3), (8, 4), (10, 5)]
        .into_iter()
        .map(|(len, ups)| SeqClass {
            flavor: Flavor::Gl,
            len,
            ups,
        })
        .collect()
}

pub fn limit_configs() -> Vec<LimitConfig> {
    vec![
        LimitConfig::gl(-1, 2, 2, 2, 2).unwrap(),
        LimitConfig::sp(1, 2, 2).unwrap(),
    ]
}
