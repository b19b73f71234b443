class Hollow {
    void empty() {
    }

    void alsoEmpty() { }
}
