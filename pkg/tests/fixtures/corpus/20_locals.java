class Locals {
    void demo() {
        int plain;
        int sum = 1 + 2;
        double[] weights;
        String greeting = "hey";
        java.util.List<String> seen;
        Map<String, Integer> counts;
        plain = sum;
    }
}
