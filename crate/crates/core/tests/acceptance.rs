use steinerlab::certify::{run_all, CertifyConfig, KNOWN_FAILURES};

#[test]
fn acceptance_criteria() {
    let results = run_all(&CertifyConfig::default());
    for r in &results {
        println!(
            "criterion {:>3}: {} [{} ms] {}: {}",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.millis,
            r.name,
            r.detail
        );
    }
    for r in &results {
        let known = KNOWN_FAILURES.contains(&r.id);
        assert_eq!(
            r.passed, !known,
            "criterion {} changed status: passed = {}, known failure = {known}",
            r.id, r.passed
        );
    }
}
