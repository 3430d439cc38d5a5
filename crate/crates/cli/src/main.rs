fn main() {
    println!("kmforge");
}
