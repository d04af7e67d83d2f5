use tilekit::iso::canonical_form;
use tilekit::expand::all_tilings;

fn main() {
    let d3 = all_tilings(3, &[0, 1]);
    let d4 = tilekit::expand::raise_tilings(&d3[..2], &[0, 1]);
    println!("sample: {} codes", d4.len());
    let t = std::time::Instant::now();
    let mut worst = std::time::Duration::ZERO;
    let mut worst_code = None;
    for c in &d4 {
        let t1 = std::time::Instant::now();
        let _ = canonical_form(c);
        let dt1 = t1.elapsed();
        if dt1 > worst { worst = dt1; worst_code = Some(c.clone()); }
    }
    let dt = t.elapsed();
    println!("{} keys in {:?} ({:.1} us/key, worst {:?})", d4.len(), dt, dt.as_micros() as f64 / d4.len() as f64, worst);
    println!("worst code: {:?}", worst_code.unwrap());
}
