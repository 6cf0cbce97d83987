use adsfam_bench::WORKLOADS;

#[test]
fn every_workload_passes() {
    for w in &WORKLOADS {
        assert!((w.run)(), "{}", w.name);
    }
}
