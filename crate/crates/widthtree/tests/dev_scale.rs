//! Temporary scale probe.

use std::time::Instant;

use widthtree::enumerate::{enumerate_with, EnumerationSpec};

#[test]
#[ignore]
fn criterion3_scale() {
    let start = Instant::now();
    let spec = EnumerationSpec::new(6, 4).with(|r| r.nonnegative = true);
    let mut count = 0u64;
    enumerate_with(&spec, |_| count += 1).unwrap();
    println!("count = {count}, elapsed = {:?}", start.elapsed());
}
