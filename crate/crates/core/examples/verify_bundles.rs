//! Runs a few `verify` bundles in process and prints their exit codes.

fn main() {
    for name in ["g16", "wrochna", "bull-sub-pi", "ab-form-4x4"] {
        let code = convexfam::cli::main_with_args(["convexfam", "verify", name]);
        println!("-> exit {code}\n");
    }
}
