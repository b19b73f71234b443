class Calc {
    int add(int a, int b) {
        return a + b;
    }

    double scale(double value, double factor, int times) {
        return value * factor * times;
    }
}
