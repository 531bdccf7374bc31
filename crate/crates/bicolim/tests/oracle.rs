mod common;

use common::{cross_check, env, oracle_fixtures};

#[test]
fn engine_matches_brute_force_oracle() {
    for (name, text) in oracle_fixtures() {
        let e = env(text);
        let c = &e.cats["C"];
        let (checked, unknowns) = cross_check(c, 8, 4);
        assert!(checked > 0, "{name}: no parallel pairs compared");
        assert_eq!(unknowns, 0, "{name}: engine returned Unknown");
    }
}
