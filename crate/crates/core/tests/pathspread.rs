mod common;

use powerdom::classify;

use common::*;

#[test]
fn counterexample_host_is_stalled_with_one_path_vertex() {
    let (host, path, s) = pathspread_counterexample();
    assert_eq!(host.n(), 10);
    assert!(host.degree(6) >= 3);
    let c = classify(&host, &s);
    assert!(c.properly_stalled);
    let hit = s.intersection(&path).len();
    assert_eq!(hit, 1);
    assert!(hit < 4usize.div_ceil(3));
    assert!(hit >= 3usize.div_ceil(3));
}

#[test]
fn shifted_and_maximal_bounds_hold_on_random_hosts() {
    let mut scan = PathspreadScan::default();
    for (k, host, path) in random_pendant_hosts(&mut rng(4), 40) {
        scan_host(&host, &path, k, &mut scan);
    }
    assert!(scan.stalled_touching > 0);
    assert_eq!(scan.shifted_violations, 0);
    assert!(scan.maximal_violations.is_empty());
    for (k, _, _) in &scan.domination_violations {
        assert_eq!(k % 3, 1);
    }
}
