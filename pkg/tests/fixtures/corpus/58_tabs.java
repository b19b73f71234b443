class Tabs {
	int a;
	void f() {
		a = 1;
	}
}
