use twin_hanoi::verify::{run_suite, Params, Status, Suite};

fn run(suite: Suite, max_n: usize) {
    let report = run_suite(suite, Params { max_n, samples: 1000, seed: 0 }).unwrap();
    for c in report.checks.iter().filter(|c| c.status != Status::Pass) {
        eprintln!("{:?} {} expected={} observed={}", c.status, c.id, c.expected, c.observed);
    }
    assert!(report.ok(), "{suite} failed");
    assert!(report.summary.total > 0);
}

#[test]
fn lemma_suite() {
    run(Suite::Lemma, 12);
}

#[test]
fn tts_suite() {
    run(Suite::Tts, 20);
}

#[test]
fn sds_suite() {
    run(Suite::Sds, 20);
}

#[test]
fn structure_suite() {
    run(Suite::Structure, 7);
}

#[test]
fn gp_suite() {
    run(Suite::Gp, 8);
}
