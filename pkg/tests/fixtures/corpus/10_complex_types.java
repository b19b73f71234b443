class Types {
    int[] numbers;
    int[][] grid;
    String[] names;
    java.util.List items;
    java.util.Map index;
    List<String> labels;
    Map<String, List<Integer>> nested;
    List<int[]> rowData;
}
