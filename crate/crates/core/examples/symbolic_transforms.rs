//! Hankel transforms over Z[a,b] and their closed generating functions.
use catalan_hankel::catalan::hankel_polys;
use catalan_hankel::identities::closed_gf;

fn main() {
    for m in 0..=3 {
        let gf = closed_gf(m).unwrap();
        println!("shift {m}: ({}) / ({})", gf.numerator, gf.denominator);
        let series = gf.expand(4).unwrap();
        for (n, h) in hankel_polys(m, 3).iter().enumerate() {
            let same = h == series.coeff(n + 1);
            println!("  h_{n} = {h}   [gf agrees: {same}]");
        }
    }
}
