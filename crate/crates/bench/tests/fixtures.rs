use forge_bench::{three_cycles, transpositions, transpositions5};

#[test]
fn fixtures_have_the_expected_shape() {
    assert!(transpositions().is_connected() && transpositions().is_faithful());
    assert!(!three_cycles().is_connected());
    assert!(transpositions5().is_connected() && transpositions5().is_faithful());
}
