class Matrix {
    int trace(int n) {
        int acc = 0;
        for (int i = 0; i < n; i = i + 1) {
            for (int j = 0; j < n; j = j + 1) {
                if (i == j) {
                    acc = acc + cell(i, j);
                }
            }
        }
        return acc;
    }
}
