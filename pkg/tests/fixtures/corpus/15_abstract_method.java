abstract class Shape {
    abstract double area();

    double unit() {
        return 1.0;
    }
}
