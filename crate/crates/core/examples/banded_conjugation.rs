//! Conjugating symbolic Hankel matrices into banded form, and the spine
//! plus residual decomposition.
use catalan_hankel::catalan::{conjugated_hankel, consecutive_diff, finite_hankel_sequence, residual_seq, spine_band};

fn main() {
    for r in 0..=5 {
        let c = conjugated_hankel(r, r + 4).unwrap();
        println!("shift {r}: bandwidth {}", c.bandwidth.width);
        if r == 2 {
            println!("{}", c.matrix);
        }
    }
    for r in 1..=5 {
        let bands: Vec<_> = (0..=r).map(|d| spine_band(r, d).to_string()).collect();
        let res: Vec<_> = residual_seq(r).iter().map(|p| p.to_string()).collect();
        println!("shift {r}: spine [{}], residual [{}]", bands.join(", "), res.join(", "));
    }
    for r in 1..=4 {
        let d = finite_hankel_sequence(&consecutive_diff(r, r + 5).unwrap()).unwrap();
        let d: Vec<_> = d.iter().map(|p| p.to_string()).collect();
        println!("difference at shift {r}: Hankel of [{}]", d.join(", "));
    }
}
