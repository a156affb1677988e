//! Reading and writing the JSON formats, and driving the command line in-process.

use homlie_kit::cli;
use homlie_kit::exactlin::{int, rat};
use homlie_kit::fixtures::central_extension;
use homlie_kit::io;

pub fn main() {
    let c = central_extension(&int(2), &rat(1, 3));
    let text = io::cocycle_json(&c).to_string();
    println!("{text}");
    let back = io::from_str_with(&text, "inline", io::cocycle_of).unwrap();
    assert_eq!(back, c);

    let dir = std::env::temp_dir().join(format!("homlie-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("central.cocycle.json");
    std::fs::write(&path, &text).unwrap();
    let out = cli::run(["homlie", "--format", "records", "check-cocycle", path.to_str().unwrap()]);
    print!("{}", out.stdout);
    assert_eq!(out.status, cli::STATUS_OK);

    // malformed input names its position
    std::fs::write(&path, "{\"g\": {\"basis\": [\"a\"]},\n \"h\": ").unwrap();
    let out = cli::run(["homlie", "check-cocycle", path.to_str().unwrap()]);
    print!("{}", out.stderr);
    assert_eq!(out.status, cli::STATUS_MALFORMED);
    std::fs::remove_dir_all(&dir).unwrap();
}
