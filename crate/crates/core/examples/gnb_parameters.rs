//! Finding Gaussian normal bases and certifying their F-tables.
//!
//!     cargo run --example gnb_parameters [m ...]

use gf2m_synth::field::{check_ghost_bit_support, find_gnb_type, gnb_verify_isomorphism, GnbParams};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let degrees = if args.is_empty() { vec![4, 5, 7, 8, 10, 163, 233, 283, 409, 571] } else { args };

    println!("{:>5} {:>6} {:>3} {:>6} {:>5}  certified", "m", "ghost", "t", "p", "u");
    for m in degrees {
        let ghost = if check_ghost_bit_support(m) { "yes" } else { "no" };
        match find_gnb_type(m) {
            Ok(p) => {
                let ok = gnb_verify_isomorphism(&p).unwrap_or(false);
                println!("{m:>5} {ghost:>6} {:>3} {:>6} {:>5}  {ok}", p.gnb_type(), p.prime(), p.u());
            }
            Err(e) => println!("{m:>5} {ghost:>6}   -      -     -  ({e})"),
        }
    }

    let p = GnbParams::with_u(5, 2, 10).expect("valid");
    println!("\nF-table for m=5, t=2, u=10: {:?}", p.f_table());
    println!("product terms (x, y), c_i += a_(x+i) b_(y+i): {:?}", p.product_terms());

    let mut table = p.f_table().to_vec();
    table.swap(1, 2);
    let broken = GnbParams::from_raw_parts(5, 2, 11, 10, table);
    println!("with F(2) and F(3) swapped: certified = {}", gnb_verify_isomorphism(&broken).unwrap());
}
