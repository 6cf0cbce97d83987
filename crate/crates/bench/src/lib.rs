//! Workloads shared by the criterion benches and their smoke test.

use adsfam::asymptotics::verify_coincidence;
use adsfam::families::{verify_centralizer, verify_equivariance, verify_uniqueness};
use adsfam::{EnvelopingAlgebra, LieAlgebraContext};

pub struct Workload {
    pub name: &'static str,
    /// Runs the workload from a cold cache; `true` when its check passes.
    pub run: fn() -> bool,
}

fn bracket_table() -> bool {
    let ctx = LieAlgebraContext::new(7).expect("n = 7");
    ctx.verify_bracket_table().iter().all(|c| c.pass)
}

fn straighten_delta_cubed() -> bool {
    let alg = EnvelopingAlgebra::new(6).expect("n = 6");
    let delta = alg.dalembertian(3);
    alg.pow(&delta, 3).is_ok_and(|d| !d.is_zero())
}

fn equivariance() -> bool {
    verify_equivariance(5, 4).is_ok_and(|r| r.pass())
}

fn uniqueness() -> bool {
    verify_uniqueness(5, 4).is_ok_and(|r| r.pass())
}

fn centralizer() -> bool {
    verify_centralizer(5, 4).is_ok_and(|r| r.pass())
}

fn coincidence() -> bool {
    verify_coincidence(6, 4).is_ok_and(|r| r.pass())
}

pub const WORKLOADS: [Workload; 6] = [
    Workload { name: "bracket_table_n7", run: bracket_table },
    Workload { name: "straighten_delta3_n6", run: straighten_delta_cubed },
    Workload { name: "equivariance_n5_N4", run: equivariance },
    Workload { name: "uniqueness_n5_N4", run: uniqueness },
    Workload { name: "centralizer_n5_d4", run: centralizer },
    Workload { name: "coincidence_n6_N4", run: coincidence },
];
