//! Driving the command-line interface from code.
//!
//! Run with `cargo run --example cli_in_process`.

use std::io;

fn main() {
    let spec = r#"{"id": "e", "kind": "ellipse", "params": {"a": 2.0, "b": 1.0}}"#;
    let code = isoperimetry::cli::run(
        ["isoperimetry", "analyze", "--format", "csv", "--spec", spec],
        &mut io::stdout(),
        &mut io::stderr(),
    );
    println!("exit code {code}");
}
