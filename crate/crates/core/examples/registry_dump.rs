//! Prints the family registry as JSON; redirect into `data/registry.json` to
//! refresh the golden file.

fn main() {
    print!("{}", convexfam::registry::registry_json());
}
