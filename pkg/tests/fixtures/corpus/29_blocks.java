class Scoped {
    void shuffle() {
        int outer = 1;
        {
            int inner = outer + 1;
            use(inner);
        }
        {
            int inner = outer + 2;
            use(inner);
        }
    }
}
