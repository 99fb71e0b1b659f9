//! Hankel transforms of shifted Catalan numbers and of consecutive pairs.
use catalan_hankel::catalan::{catalan_seq, combo_seq, eq_e1_product};
use catalan_hankel::hankel::hankel_transform;
use catalan_hankel::ring::Integer;

fn row<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    let c = catalan_seq(22);
    println!("C(n+k):");
    for k in 0..=6 {
        let h = hankel_transform(&c[k..], 5).unwrap();
        let e: Vec<_> = (0..6).map(|n| eq_e1_product(n, k)).collect();
        println!("  k={k}: {}   (product: {})", row(&h), row(&e));
    }
    println!("C(n+k) + C(n+k+1):");
    let one = Integer::from(1);
    for k in 0..=6 {
        println!("  k={k}: {}", row(&hankel_transform(&combo_seq(k, &one, &one, 10), 5).unwrap()));
    }
}
