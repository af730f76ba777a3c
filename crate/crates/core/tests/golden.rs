mod common {
    pub mod golden_data;
}

use std::time::Instant;

use common::golden_data::tables;
use wittenpoly::exactalg::Rational;
use wittenpoly::liepolys::{compute_p, to_bernoulli_expansion};
use wittenpoly::rootsystems::build_root_system;

#[test]
fn tables_reproduce() {
    let mut bad = Vec::new();
    for (label, ell, terms) in tables() {
        let t = Instant::now();
        let rs = build_root_system(label).unwrap();
        let e = to_bernoulli_expansion(&compute_p(&rs, ell).unwrap()).unwrap();
        let mut ok = e.len() == terms.len();
        for (l, num, den) in &terms {
            if e.coefficient(l) != Rational::new(*num, *den) {
                ok = false;
            }
        }
        eprintln!("{label} ell={ell}: {} in {:?}", if ok { "ok" } else { "MISMATCH" }, t.elapsed());
        if !ok {
            bad.push(format!("{label} {ell}: {e}"));
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}
