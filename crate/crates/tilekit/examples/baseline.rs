use tilekit::expand::all_tilings;
use tilekit::iso::classify;

fn main() {
    let t0 = std::time::Instant::now();
    let d1 = all_tilings(1, &[0]);
    println!("M1(1)={} N1={}", d1.len(), classify(d1).len());
    let d2 = all_tilings(2, &[0, 1]);
    println!("M2(2)={} N2={}", d2.len(), classify(d2).len());
    let d3_2 = all_tilings(3, &[0, 1]);
    println!("M3(2)={} N3(2)={}", d3_2.len(), classify(d3_2).len());
    println!("t={:?}", t0.elapsed());
    let d3_4 = all_tilings(3, &[0, 1, 2, 3]);
    println!("M3(4)={}", d3_4.len());
    let t1 = std::time::Instant::now();
    let n3 = classify(d3_4);
    println!("N3(4)={} classify_t={:?}", n3.len(), t1.elapsed());
    println!("total t={:?}", t0.elapsed());
}
