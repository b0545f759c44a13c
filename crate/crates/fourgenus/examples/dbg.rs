use fourgenus::knot::*;
fn main() {
    // search two-bridge fractions 25/q for the one with the 8_8 polynomial
    let target: Vec<i64> = vec![2, -6, 9, -6, 2];
    for q in 2..25u64 {
        if num_integer::gcd(q, 25) != 1 { continue; }
        let cf = continued_fraction(25, q);
        let total: u64 = cf.iter().sum();
        if total > 10 { continue; }
        match rational_knot_diagram("cand", &cf) {
            Ok(d) => {
                let p = wirtinger(&d);
                let delta = alexander_integral(&p);
                let coeffs: Vec<String> = delta.poly_coeffs().iter().map(|c| c.to_string()).collect();
                println!("25/{q} cf={cf:?} crossings={} delta={:?}", d.crossing_count(), coeffs);
                let want: Vec<String> = target.iter().map(|c| c.to_string()).collect();
                if coeffs == want { println!("  ^^^ MATCH for 8_8"); }
            }
            Err(e) => println!("25/{q} cf={cf:?}: {e}"),
        }
    }
    // pretzel P(3,-3,3,-2) should give 11n74: delta = (t^2-t+1)^2 = 1 -2t +3t^2 -2t^3 + t^4
    for params in [vec![3i64,-3,3,-2], vec![-3,3,-3,2]] {
        match pretzel_diagram("cand", &params) {
            Ok(d) => {
                let p = wirtinger(&d);
                let delta = alexander_integral(&p);
                let coeffs: Vec<String> = delta.poly_coeffs().iter().map(|c| c.to_string()).collect();
                println!("P{params:?} crossings={} writhe={} delta={:?}", d.crossing_count(), d.writhe(), coeffs);
            }
            Err(e) => println!("P{params:?}: {e}"),
        }
    }
}
