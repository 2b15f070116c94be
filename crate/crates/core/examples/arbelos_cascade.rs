//! The point circle at the contact of two circles.
//!
//! Expanding the family of fourth circles at `w = 0` and reading off
//! `C_0`, `C_1`, `C_2` gives the origin, the Bankoff circle and the incircle
//! of the arbelos. Exact rational output for any rational radii.
//!
//! cargo run --example arbelos_cascade -- 3/2 5/7

use descartes_dbz::{dbz_family_extract, family_member, ArbelosConfig, Rational, Scalar, DEFAULT_ORDER};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let parse = |i: usize, default: &str| {
        let text = args.get(i).map(String::as_str).unwrap_or(default);
        Rational::parse_scalar(text).unwrap_or_else(|| panic!("not a number: {text}"))
    };
    let (r1, r2) = (parse(0, "2"), parse(1, "1"));
    let cfg = ArbelosConfig::new(r1.clone(), r2.clone()).expect("positive radii");
    let x = dbz_family_extract(&cfg, DEFAULT_ORDER).unwrap();

    println!("r1 = {r1}, r2 = {r2}");
    for (k, (name, circle)) in [("C_0", &x.point), ("C_1", &x.bankoff), ("C_2", &x.incircle)].into_iter().enumerate() {
        let f = &x.forms[k];
        println!("{name}: {}(x² + y²) + {}x + {}y + {} = 0", f.a, f.b, f.c, f.d);
        println!("     {}", serde_json::to_string(circle).unwrap());
    }
    println!("closed forms: bankoff {}, incircle {}", cfg.bankoff_radius(), cfg.incircle_radius());

    // members of the family approach the origin as w -> 0
    let fcfg = ArbelosConfig::new(r1.to_f64(), r2.to_f64()).unwrap();
    for w in [1.0, 0.1, 0.01, 0.001] {
        let m = family_member(&w, &fcfg).unwrap();
        println!("w = {w:<6} center ({:.6}, {:.6}) r4 {:.3e}", m.x4, m.y4, m.r4);
    }
}
