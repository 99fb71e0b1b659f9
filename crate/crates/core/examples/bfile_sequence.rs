//! Reads a sequence in b-file format and prints its Hankel transform.
use catalan_hankel::cli::parse_bfile;
use catalan_hankel::hankel::hankel_transform;

const MOTZKIN: &str = "# Motzkin numbers
0 1
1 1
2 2
3 4
4 9
5 21
6 51
7 127
8 323
";

fn main() {
    let seq = parse_bfile(MOTZKIN).unwrap();
    println!("{:?}", hankel_transform(&seq, 4).unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
