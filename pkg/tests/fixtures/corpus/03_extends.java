class Child extends Parent {
    int x;
}
