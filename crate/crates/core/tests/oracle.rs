//! The environment machine against the naive substitution normalizer.

mod common;

use cdle::reduction::{normalize, Fuel};
use common::gen::pure_terms;
use common::naive::{self, Verdict};

const FUEL: u64 = 10_000;
const SIZE_BOUND: usize = 4_000;

#[test]
fn machine_agrees_with_substitution_on_random_terms() {
    let s = common::on_big_stack(|| common::oracle_run(0x5eed, 1000, FUEL));
    assert!(s.disagreements.is_empty(), "{:#?}", s.disagreements);
    assert_eq!(s.compared(), 1000);
    assert!(s.both_normal >= 900, "{s:?}");
    eprintln!("{s:?}");
}

#[test]
fn tight_fuel_cuts_at_the_same_step() {
    common::on_big_stack(tight)
}

fn tight() {
    for t in pure_terms(7, 300, 30) {
        let Verdict::Normal { beta, eta, .. } = naive::normalize(&t, FUEL, SIZE_BOUND) else {
            continue;
        };
        let total = beta + eta;
        if total == 0 {
            continue;
        }
        assert!(
            !normalize(&t, Fuel::new(total).unwrap()).exhausted(),
            "{}",
            t.pretty()
        );
        if total > 1 {
            let short = normalize(&t, Fuel::new(total - 1).unwrap());
            assert!(short.exhausted(), "{}", t.pretty());
            assert!(matches!(
                naive::normalize(&t, total - 1, SIZE_BOUND),
                Verdict::Exhausted
            ));
        }
    }
}
