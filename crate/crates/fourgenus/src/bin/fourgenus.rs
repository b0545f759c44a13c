fn main() {
    println!("fourgenus");
}
