class Guard {
    boolean check(int value, int lo, int hi) {
        if (value < lo) {
            return false;
        } else if (value > hi) {
            return false;
        }
        return true;
    }

    int clampLow(int v) {
        while (v < 0) {
            v = v + 10;
        }
        return v;
    }
}
