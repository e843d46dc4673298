//! Diffie–Hellman with T_a(T_b(g)) = T_b(T_a(g)), in process and over a
//! loopback socket.
//!
//!     cargo run --example key_exchange

use std::net::TcpListener;
use std::thread;

use chebres::crypto::{
    chebyshev_primitive_root, dh_demo, dh_keygen, discrete_log_bruteforce, net, random_secret,
};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> chebres::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let p = 1_000_003u64;
    let g = chebyshev_primitive_root(p)?;
    let (pb, gb) = (BigUint::from(p), BigUint::from(g));

    let t = dh_demo(
        &pb,
        &gb,
        &random_secret(&mut rng, &pb),
        &random_secret(&mut rng, &pb),
    )?;
    println!("A -> B {}", t.frames[0]);
    println!("B -> A {}", t.frames[1]);
    println!("agreed on {:?}", t.alice.shared);

    let listener = TcpListener::bind("127.0.0.1:0")?;
    let addr = listener.local_addr()?;
    let server = dh_keygen(&pb, &gb, &random_secret(&mut rng, &pb))?;
    let client = dh_keygen(&pb, &gb, &random_secret(&mut rng, &pb))?;
    let handle = thread::spawn(move || net::serve_once(&listener, &server));
    let client = net::connect(addr, &client)?;
    let server = handle.join().expect("server thread")?;
    println!("over TCP: {:?} == {:?}", server.shared, client.shared);

    // small primes fall to a walk along the orbit
    println!(
        "T_n(19) = 0 mod 23 first at n = {:?}",
        discrete_log_bruteforce(23, 19, 0)?
    );
    Ok(())
}
